"""Catastrophe analysis of periodically time-varying convolutional encoders."""

__version__ = "0.1.0"

from .catastrophic import (
    CatastrophicReport,
    NotCatastrophic,
    Verdict,
    convert,
    massey_sain_check,
    periodic_check,
    verify_same_code,
)
from .encoder import (
    PeriodicEncoder,
    RationalPeriodicEncoder,
    TimeInvariantEncoder,
    encode_parallel,
    encode_rational,
    encode_serial,
)
from .gf2poly import Poly, gcd, gcd_many, inflate, parse_poly, split_delay
from .oracle import TooLarge, oracle_check, realize
from .polymatrix import PolyMatrix, RankDeficient, all_minors, determinant, minor_gcd
from .tvece import build_tvece
