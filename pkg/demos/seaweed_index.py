"""
Index of seaweed subalgebras, two ways.

The meander graph of a pair of compositions gives the index combinatorially.
The Kirillov form evaluated at random integer functionals gives an upper
bound that is almost always sharp.  Here the two are compared on a few
classic examples and on random seaweeds.
"""

from strangeorbits import ratlin
from strangeorbits.lie import index_monte_carlo, sl
from strangeorbits.seaweed import SeaweedSpec, dk_index, meander, random_seaweed, seaweed_basis


def compare(spec, rng) -> bool:
    n = spec.n
    mc = index_monte_carlo(seaweed_basis(spec, sl(n)), trials=8, rng=rng).upper_bound_on_index
    dk = dk_index(spec)
    m = meander(spec)
    print(f"{str(spec):<22} cycles={m.cycles} paths={m.paths}  meander={dk}  random<={mc}")
    return dk == mc


rng = ratlin.make_rng(2024)
for text in ["1|1|1|1|1|1 / 6", "1|2|6 / 9", "2|2|2 / 3|3", "4|1 / 1|4", "2|2 / 4"]:
    compare(SeaweedSpec.parse(text), rng)

agree = sum(compare(random_seaweed(int(rng.integers(2, 8)), rng), rng) for _ in range(10))
print(f"\nrandom seaweeds in agreement: {agree}/10")
