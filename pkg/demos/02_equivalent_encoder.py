# A periodically time-varying encoder as a bigger time-invariant one.
#
# Constituents G_1 = [1+D, 1+D^2] and G_2 = [1, 1+D] alternate: even epochs
# use G_1, odd epochs G_2.  Grouping two epochs into one super-symbol gives
# a rate 2/4 time-invariant encoder with the same input/output map.
import numpy as np

from tvcc import PeriodicEncoder, TimeInvariantEncoder, build_tvece, encode_parallel, encode_serial
from tvcc.tvece import block_input, encode_via_tvece, serialize

e = PeriodicEncoder((TimeInvariantEncoder.parse("11 101"), TimeInvariantEncoder.parse("1 11")))
print(f"p={e.p} k={e.k} n={e.n} m={e.memory}")

tv = build_tvece(e)
print("equivalent transfer matrix:", tv.encoder.g)
print("memory", tv.encoder.memory, "<= ceil(m/p) =", tv.memory_bound)

rng = np.random.default_rng(1)
u = rng.integers(0, 2, size=(12, 1), dtype=np.uint8)

# Three ways to encode the same input
serial = encode_serial(e, u)        # one circuit with switching taps
parallel = encode_parallel(e, u)    # all constituents run, outputs punctured
blocked = encode_via_tvece(e, u)    # time-invariant equivalent on 2-epoch blocks
print("serial == parallel:", np.array_equal(serial, parallel))
print("serial == equivalent:", np.array_equal(serial, blocked))

# Blocking is just round-robin serialisation read backwards
evens, odds = u[0::2], u[1::2]
print("serialize(evens, odds) == u:", np.array_equal(serialize([evens, odds]), u))
print("blocked input:", block_input(u, 2).tolist())
