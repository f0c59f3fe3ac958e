"""Admissible lower bounds on the weight still to be placed in a partial assignment.

Discharging view of a finished tRDF f on a graph of maximum degree D: every vertex starts
with charge |f(v)|, and every colored vertex w passes (|f(w)| - q) / e(w) to each of its
e(w) uncolored neighbors, where q = min(t, 2D) / 2D. Every vertex then ends with charge at
least q, so w(f) >= q |V|. For a partial assignment the unplaced vertices U end with at
least q |U| between them, of which at most

    sum over placed colored w of (|f(w)| - q) * u(w) / (e_A(w) + u(w))

can have come from the placed side (u(w) unplaced and e_A(w) placed uncolored neighbors).
Charges are kept as integers scaled by 2D * lcm(1..D).
"""

import math


class Discharging:
    """Integer bookkeeping for the discharging bound of one (graph degree, t) pair."""

    def __init__(self, t: int, max_degree: int) -> None:
        if max_degree == 0:
            # isolated vertices must be colored: q = 1
            self.share, self.denominator, self.lcm = 1, 1, 1
        else:
            self.share = min(t, 2 * max_degree)
            self.denominator = 2 * max_degree
            self.lcm = math.lcm(*range(1, max_degree + 1))
        self.scale = self.denominator * self.lcm

    def outflow(self, colors: int, unplaced: int, placed_empty: int) -> int:
        """Scaled charge a placed vertex can still pass to its unplaced neighbors."""
        if colors == 0 or unplaced == 0:
            return 0
        per_neighbor = self.lcm // (placed_empty + unplaced)
        return (colors * self.denominator - self.share) * unplaced * per_neighbor

    def residual(self, n_unplaced: int, inflow: int) -> int:
        """Minimum weight the unplaced vertices must still carry."""
        owed = self.share * self.lcm * n_unplaced - inflow
        return max(0, -(-owed // self.scale))

    def root(self, n_vertices: int) -> int:
        """The bound before anything is placed; ceil(t |V| / 2D) below t = 2D."""
        return self.residual(n_vertices, 0)
