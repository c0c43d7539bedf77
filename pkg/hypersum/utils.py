"""Various utility functions."""
import random
from fractions import Fraction
from typing import Any


def seeded_random(seed: Any, name: str) -> random.Random:
    """
    Create a random generator derived from a seed and a stream name.

    Streams with different names are independent, so adding draws to one identity
    does not change the draws of another.
    """
    return random.Random('{}:{}'.format(seed, name))


def random_rational(rng: random.Random, numerator_max: int, denominator_max: int, nonzero: bool = False) -> Fraction:
    """Draw p/q with |p| <= numerator_max and 1 <= q <= denominator_max."""
    while True:
        value = Fraction(rng.randint(-numerator_max, numerator_max), rng.randint(1, denominator_max))
        if value or not nonzero:
            return value


def random_non_integer(rng: random.Random, numerator_max: int, denominator_max: int) -> Fraction:
    """Draw a rational that is not an integer, which can never block a Pochhammer denominator."""
    while True:
        value = random_rational(rng, numerator_max, max(denominator_max, 2))
        if value.denominator != 1:
            return value
