"""4-plat diagrams of two-bridge links and their linking numbers.

Layout: four horizontal rows 0..3 (bottom to top). Term a_k twists rows
(1, 2) for odd k and rows (2, 3) for even k, |a_k| crossings each. The
left end caps rows (0, 1) and (2, 3); the right end does the same after
an odd number of terms and nests (0, 3) around (1, 2) after an even
number. Row 0 runs straight through.

Crossing handedness alternates with the twist position, so an all
positive expansion gives an alternating diagram. The overall sign is
fixed so the Hopf link [2] has linking number +1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .core import ContFrac, ContFracError, cf_eval


@dataclass(frozen=True)
class Crossing:
    column: int
    low: int          # rows low and low + 1 swap here
    ascending_over: bool


class FourPlat:
    def __init__(self, cf: ContFrac):
        self.cf = cf
        crossings = []
        for k, a in enumerate(cf.terms, start=1):
            low = 1 if k % 2 == 1 else 2
            handed = (1 if a > 0 else -1) * (1 if k % 2 == 1 else -1)
            for _ in range(abs(a)):
                crossings.append(Crossing(len(crossings), low, handed > 0))
        self.crossings: tuple[Crossing, ...] = tuple(crossings)
        if len(cf.terms) % 2 == 1:
            self.right_caps = ((0, 1), (2, 3))
        else:
            self.right_caps = ((0, 3), (1, 2))
        self.left_caps = ((0, 1), (2, 3))
        self._trace()

    @staticmethod
    def _partner(caps, row):
        for a, b in caps:
            if row in (a, b):
                return a + b - row
        raise AssertionError(row)

    def _trace(self):
        # visits[(column, side)] -> (component, direction): side 'P' is the
        # strand going up the twist (row low -> low + 1) read left to right.
        n = len(self.crossings)
        visits: dict[tuple[int, str], tuple[int, int]] = {}
        seen: set[tuple[int, int, int]] = set()
        component = 0
        for start_row in range(4):
            state = (0, start_row, 1)
            if state in seen or (0, start_row, -1) in seen:
                continue
            while state not in seen:
                seen.add(state)
                col, row, d = state
                if d == 1:
                    if col == n:
                        state = (col, self._partner(self.right_caps, row), -1)
                        continue
                    x = self.crossings[col]
                    if row == x.low:
                        visits[(col, "P")] = (component, 1)
                        row = x.low + 1
                    elif row == x.low + 1:
                        visits[(col, "Q")] = (component, 1)
                        row = x.low
                    state = (col + 1, row, 1)
                else:
                    if col == 0:
                        state = (0, self._partner(self.left_caps, row), 1)
                        continue
                    x = self.crossings[col - 1]
                    if row == x.low + 1:
                        visits[(col - 1, "P")] = (component, -1)
                        row = x.low
                    elif row == x.low:
                        visits[(col - 1, "Q")] = (component, -1)
                        row = x.low + 1
                    state = (col - 1, row, -1)
            component += 1
        self.n_components = component
        self._visits = visits

    def crossing_signs(self) -> list[tuple[int, int, int]]:
        """(component of P, component of Q, sign) for every crossing."""
        out = []
        for x in self.crossings:
            cp, dp = self._visits[(x.column, "P")]
            cq, dq = self._visits[(x.column, "Q")]
            tau = 1 if x.ascending_over else -1
            out.append((cp, cq, -tau * dp * dq))
        return out

    def linking_number(self) -> int:
        if self.n_components != 2:
            raise ContFracError(f"{self.cf} is a knot diagram; no linking number")
        total = sum(sign for cp, cq, sign in self.crossing_signs() if cp != cq)
        assert total % 2 == 0
        return total // 2


def linking_number(cf: ContFrac) -> int:
    f: Fraction = cf_eval(cf)
    if f.denominator % 2 == 1:
        raise ContFracError(f"{cf} = {f} has odd denominator: a knot has no linking number")
    return FourPlat(cf).linking_number()
