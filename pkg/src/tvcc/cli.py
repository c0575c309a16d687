"""Command-line front end.

Exit codes: 0 ran and the encoder is non-catastrophic, 2 ran and it is
catastrophic, 1 on any error.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import __version__
from .bench import doubling_ratios, loglog_slope, run_bench
from .catastrophic import (
    NotCatastrophic,
    Verdict,
    conversion_divisor,
    convert,
    massey_sain_check,
    periodic_check,
    verify_same_code,
)
from .encfile import format_encoder, load_encoder
from .encoder import PeriodicEncoder, RationalPeriodicEncoder, encode_rational, encode_serial, tail
from .gf2poly import ONE, format_poly, to_octal
from .oracle import format_witness, oracle_check, realize
from .polymatrix import RankDeficient
from .tvece import build_tvece

EXIT_OK, EXIT_ERROR, EXIT_CATASTROPHIC = 0, 1, 2


def _emit(fields: dict, machine: bool, human: str) -> None:
    if machine:
        for key, val in fields.items():
            print(f"{key}={val}")
    else:
        print(human)


def _verdict_code(verdict: Verdict) -> int:
    return EXIT_CATASTROPHIC if verdict is Verdict.CATASTROPHIC else EXIT_OK


def _polynomial_part(e):
    """The feedforward encoder inside ``e``, or None for a true rational one."""
    if isinstance(e, RationalPeriodicEncoder):
        return e.base if e.den == ONE else None
    return e


def cmd_check(args) -> int:
    e = load_encoder(args.file)
    base = _polynomial_part(e)
    if base is None:
        # rational encoders are decided on the realized circuit
        res = oracle_check(realize(e))
        fields = {"verdict": str(res.verdict), "method": "oracle", "den": format_poly(e.den),
                  "p": str(e.p)}
        _emit(fields, args.machine, f"{res.verdict} method=oracle den={format_poly(e.den)}")
        return _verdict_code(res.verdict)

    if base.p == 1:
        report = massey_sain_check(base.constituents[0])
    else:
        report = periodic_check(base)
    fields = dict(report.fields(), method="minor-gcd")
    human = report.summary()
    if args.octal:
        human += f" (octal f={to_octal(report.f)} g={to_octal(report.g)})"
    _emit(fields, args.machine, human)
    return _verdict_code(report.verdict)


def cmd_tvece(args) -> int:
    e = load_encoder(args.file)
    base = _polynomial_part(e)
    if base is None:
        raise ValueError("tvece needs a feedforward (polynomial) encoder")
    tv = build_tvece(base)
    g = tv.encoder.g
    rows = [" ".join(format_poly(x) for x in g.row(i)) for i in range(g.rows)]
    if args.machine:
        fields = {"p": tv.source_p, "k": tv.encoder.k, "n": tv.encoder.n,
                  "memory": tv.encoder.memory, "memory_bound": tv.memory_bound}
        fields.update({f"row{i}": r for i, r in enumerate(rows)})
        _emit(fields, True, "")
        return EXIT_OK
    print(f"# equivalent of the period-{tv.source_p} encoder: "
          f"{tv.encoder.k} inputs, {tv.encoder.n} outputs, memory {tv.encoder.memory} "
          f"(bound {tv.memory_bound})")
    print(format_encoder(PeriodicEncoder((tv.encoder,))), end="")
    return EXIT_OK


def cmd_convert(args) -> int:
    e = load_encoder(args.file)
    base = _polynomial_part(e)
    if base is None:
        raise ValueError("convert needs a feedforward (polynomial) encoder")
    report = periodic_check(base)
    out = convert(base)
    text = format_encoder(out)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        print(text, end="")
    how = "exact, feedforward result" if out.is_polynomial() else "shared denominator"
    note = (f"converted: f={format_poly(report.f)} l={report.delay_l}; divided by "
            f"g(D^{base.p})={format_poly(conversion_divisor(base, report))} ({how})")
    if report.delay_l:
        note += f"; delay factor D^{report.delay_l} kept (dividing by it would be non-causal)"
    print(note, file=sys.stderr)
    if args.verify:
        ok = verify_same_code(base, out, trials=args.trials, length=args.length, seed=args.seed)
        print(f"verify_same_code={'pass' if ok else 'FAIL'}", file=sys.stderr)
        if not ok:
            return EXIT_ERROR
    return EXIT_OK


def _parse_bits(text: str, width: int) -> np.ndarray:
    bits = [c for c in text if c not in " ,_"]
    if any(c not in "01" for c in bits):
        raise ValueError(f"input must be binary, got {text!r}")
    if len(bits) % width:
        raise ValueError(f"{len(bits)} input bits do not split into {width}-tuples")
    return np.array([int(c) for c in bits], dtype=np.uint8).reshape(-1, width)


def cmd_encode(args) -> int:
    e = load_encoder(args.file)
    u = _parse_bits(args.input, e.k)
    if args.tail:
        u = tail(u, e.memory)
    if isinstance(e, RationalPeriodicEncoder):
        v = encode_rational(e, u, args.len)
    else:
        if args.len is not None and args.len > u.shape[0]:
            u = tail(u, args.len - u.shape[0])
        v = encode_serial(e, u)[: args.len]
    symbols = ["".join(str(b) for b in row) for row in v]
    if args.machine:
        _emit({"epochs": len(symbols), "weight": int(v.sum()), "output": " ".join(symbols)},
              True, "")
    else:
        print(" ".join(symbols))
    return EXIT_OK


def cmd_oracle(args) -> int:
    e = load_encoder(args.file)
    graph = realize(e)
    res = oracle_check(graph)
    fields = {"verdict": str(res.verdict), "state_bits": graph.state_bits,
              "nodes": graph.num_nodes, "edges": graph.num_edges}
    if res.witness:
        fields["witness_length"] = len(res.witness)
    _emit(fields, args.machine,
          f"{res.verdict} state_bits={graph.state_bits} edges={graph.num_edges}")
    if res.witness and not args.machine:
        for line in format_witness(graph, res.witness):
            print("  " + line)
    return _verdict_code(res.verdict)


def cmd_bench(args) -> int:
    rows = run_bench(range(args.m_min, args.m_max + 1))
    ms = [r.m for r in rows]
    slope = loglog_slope(ms, [r.gcd_ops for r in rows])
    ratios = doubling_ratios([r.oracle_edges for r in rows])
    if args.machine:
        for r in rows:
            print(f"m={r.m} gcd_ops={r.gcd_ops} gcd_seconds={r.gcd_seconds:.6f} "
                  f"oracle_edges={r.oracle_edges} oracle_seconds={r.oracle_seconds:.6f}")
        print(f"gcd_loglog_slope={slope:.4f}")
        print(f"oracle_doubling_min={min(ratios):.4f}")
        print(f"oracle_doubling_max={max(ratios):.4f}")
        return EXIT_OK
    print(f"{'m':>3} {'gcd ops':>9} {'gcd ms':>9} {'oracle edges':>13} {'oracle ms':>10}")
    for r in rows:
        print(f"{r.m:>3} {r.gcd_ops:>9} {1e3 * r.gcd_seconds:>9.3f} "
              f"{r.oracle_edges:>13} {1e3 * r.oracle_seconds:>10.3f}")
    print(f"gcd ops log-log slope: {slope:.3f}; oracle edge ratio per unit m: "
          f"{min(ratios):.3f}..{max(ratios):.3f}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        # exit status 2 is reserved for a catastrophic verdict
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="tvcc", description="Catastrophe analysis of periodically time-varying convolutional encoders."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, file=True):
        sp = sub.add_parser(name, help=help_)
        if file:
            sp.add_argument("file", help="encoder file")
        sp.add_argument("--machine", action="store_true", help="one key=value line per field")
        sp.set_defaults(func=fn)
        return sp

    sp = add("check", cmd_check, "minor-GCD catastrophe test")
    sp.add_argument("--octal", action="store_true", help="also show octal generator notation")
    add("tvece", cmd_tvece, "print the time-invariant equivalent encoder")
    sp = add("convert", cmd_convert, "convert a catastrophic encoder")
    sp.add_argument("-o", "--output", help="write the converted encoder here")
    sp.add_argument("--verify", action="store_true", help="randomized same-code check")
    sp.add_argument("--trials", type=int, default=100)
    sp.add_argument("--length", type=int, default=64)
    sp.add_argument("--seed", type=int, default=0)
    sp = add("encode", cmd_encode, "encode an input bit string")
    sp.add_argument("--input", required=True, help="input bits, k per epoch, epoch-major")
    sp.add_argument("--tail", action="store_true", help="append m all-zero epochs")
    sp.add_argument("--len", type=int, default=None, help="number of output epochs")
    add("oracle", cmd_oracle, "state-graph catastrophe test")
    sp = add("bench", cmd_bench, "GCD route vs. state-graph cost sweep", file=False)
    sp.add_argument("--m-min", type=int, default=2)
    sp.add_argument("--m-max", type=int, default=14)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (NotCatastrophic, RankDeficient) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
