# Repairing a catastrophic periodic encoder.
#
# Using G_1 = G_2 = [1+D, 1+D^2] with period 2 is still catastrophic.  The
# minor GCD of the equivalent encoder is g(D) = 1+D, so dividing every
# constituent by g(D^2) = 1+D^2 removes the catastrophic behaviour without
# changing the code.
from tvcc import PeriodicEncoder, TimeInvariantEncoder, convert, periodic_check, verify_same_code
from tvcc.encfile import format_encoder
from tvcc.oracle import oracle_check, realize

G = TimeInvariantEncoder.parse("11 101")
e = PeriodicEncoder((G, G))
report = periodic_check(e)
print("before:", report.summary())

fixed = convert(e)
print("converted encoder file:")
print(format_encoder(fixed))

print("oracle on the realized feedback circuit:", oracle_check(realize(fixed)).verdict)
print("same code on 100 random inputs:", verify_same_code(e, fixed, trials=100, length=64, seed=3))

# When the divisor goes into every entry the result stays feedforward
single = convert(PeriodicEncoder.time_invariant(G))
print("period-1 repair:", single.base.constituents[0].g, "den", single.den)

# A delay factor in the GCD is not catastrophic and is never divided out:
# [D+D^2, D+D^3] has GCD D(1+D); only 1+D is removed.
print(periodic_check(PeriodicEncoder.time_invariant(TimeInvariantEncoder.parse("011 0101"))).summary())
