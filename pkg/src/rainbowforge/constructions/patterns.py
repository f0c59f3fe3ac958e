"""Explicit rainbow dominating functions: the 6-periodic extremal pattern on P(n, k)."""

from rainbowforge.errors import ParameterDomainError
from rainbowforge.models.assignment import ColorSet, RainbowAssignment, TriPartition

PATTERN_COLORS = (3, 4, 5)

_DEFAULT_BLOCKS: dict[int, tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]] = {
    3: ((1,), (2,), (3,)),
    4: ((1, 2), (3,), (4,)),
    5: ((1, 2), (3, 4), (5,)),
}


def default_tripartition(t: int) -> TriPartition:
    if t not in _DEFAULT_BLOCKS:
        raise ParameterDomainError(f"default tripartition needs t in {{3, 4, 5}}, got t={t}")
    a, b, c = _DEFAULT_BLOCKS[t]
    return TriPartition(t=t, a=frozenset(a), b=frozenset(b), c=frozenset(c))


def check_pattern_domain(n: int, k: int, t: int) -> None:
    """Raise ParameterDomainError naming the first failed precondition of the pattern."""
    if t not in PATTERN_COLORS:
        raise ParameterDomainError(f"extremal pattern needs t in {{3, 4, 5}}, got t={t}")
    if n % 6 != 0:
        raise ParameterDomainError(f"extremal pattern needs n ≡ 0 (mod 6), got n={n}")
    if k % 6 not in (1, 5):
        raise ParameterDomainError(
            f"extremal pattern needs k ≡ 1 or 5 (mod 6), got k={k} ≡ {k % 6} (mod 6)"
        )
    if not 1 <= k < n / 2:
        raise ParameterDomainError(f"extremal pattern needs 1 <= k < n/2, got n={n}, k={k}")


def extremal_pattern(
    n: int, k: int, t: int, partition: TriPartition | None = None
) -> RainbowAssignment:
    """The weight t*n/3 rainbow dominating function on P(n, k).

    Outer cycle: u_{6i} = A, u_{6i+2} = B, u_{6i+4} = C, odd positions empty.
    Inner vertices: v_{6i+1} = C, v_{6i+3} = A, v_{6i+5} = B, even positions empty.
    Every uncolored vertex then sees A, B and C once each. The inner order must be C, A, B:
    with A, B, C there, u_1 sees A twice and misses C.
    """
    check_pattern_domain(n, k, t)
    p = partition or default_tripartition(t)
    if p.t != t:
        raise ParameterDomainError(f"partition is over {p.t} colors, pattern needs {t}")
    empty: ColorSet = frozenset()
    outer_cycle = (p.a, empty, p.b, empty, p.c, empty)
    inner_cycle = (empty, p.c, empty, p.a, empty, p.b)
    colors = [outer_cycle[i % 6] for i in range(n)] + [inner_cycle[i % 6] for i in range(n)]
    return RainbowAssignment(t=t, colors=tuple(colors))
