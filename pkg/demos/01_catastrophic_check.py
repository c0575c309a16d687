# Deciding whether a convolutional encoder is catastrophic.
#
# The rate-1/2, memory-2 encoder G(D) = [1+D, 1+D^2] is the textbook bad
# case: feeding it the all-ones sequence 1/(1+D) produces only three ones.
import numpy as np

from tvcc import PeriodicEncoder, RationalPeriodicEncoder, TimeInvariantEncoder
from tvcc.catastrophic import massey_sain_check
from tvcc.encoder import encode_rational
from tvcc.gf2poly import parse_poly
from tvcc.oracle import format_witness, oracle_check, realize

# Polynomials are written little-endian: "11" is 1+D, "101" is 1+D^2.
G = TimeInvariantEncoder.parse("11 101")
print("memory:", G.memory)

# The GCD of the order-k minors decides it.  For k = 1 the minors are
# just the entries, and gcd(1+D, 1+D^2) = 1+D is not a pure delay.
report = massey_sain_check(G)
print(report.summary())

# Push the infinite all-ones input through the encoder (as 1 / (1+D)).
e = PeriodicEncoder.time_invariant(G)
impulse = np.zeros((64, 1), dtype=np.uint8)
impulse[0] = 1
v = encode_rational(RationalPeriodicEncoder(e, parse_poly("11")), impulse, 64)
print("first outputs:", v[:6].tolist(), "total weight:", int(v.sum()))

# The state diagram shows the same thing: a loop with all-zero outputs
# that keeps consuming ones.
graph = realize(e)
res = oracle_check(graph)
print("state-graph verdict:", res.verdict)
for line in format_witness(graph, res.witness):
    print("   ", line)

# A non-catastrophic neighbour for contrast
print(massey_sain_check(TimeInvariantEncoder.parse("1 11")).summary())
