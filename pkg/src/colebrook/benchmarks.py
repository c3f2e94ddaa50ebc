"""The five published benchmark problems and their reference solutions.

Problems 2 and 5 sit in the slow-convergence zone of the domain; the other
three are ordinary interior points.  Indexing is 1-based to match the
published numbering.
"""

from .core import ColebrookParams

__all__ = ["EXAMPLE_PROBLEMS", "EXAMPLE_SOLUTIONS", "example_problem"]

EXAMPLE_PROBLEMS = {
    1: ColebrookParams(3.78e6, 0.00854),
    2: ColebrookParams(6.23e4, 0.012),
    3: ColebrookParams(1.18e7, 0.032),
    4: ColebrookParams(5.74e7, 0.0008),
    5: ColebrookParams(8.31e3, 0.024),
}

# Reference roots in the transformed variable x = 1/sqrt(lambda).
EXAMPLE_SOLUTIONS = {
    1: 5.274511499,
    2: 4.928634498,
    3: 4.128359435,
    4: 7.331277467,
    5: 4.22204103,
}


def example_problem(index: int) -> ColebrookParams:
    try:
        return EXAMPLE_PROBLEMS[index]
    except KeyError:
        raise KeyError(f"example index must be 1..5, got {index!r}") from None
