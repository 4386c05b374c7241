"""Mackey functors for the cyclic group of order three, over F3.

A Mackey functor here is the data of two F3 vector spaces M(C3/C3) = M(*) and
M(C3/e) = M(C3) together with restriction p_star_up : M(*) -> M(C3), transfer
p_star_down : M(C3) -> M(*), and the Weyl action t_star / t_lower on M(C3).
Maps are matrices acting on column vectors; composition g after f is g @ f.

verify_axioms checks the six compatibilities:

  (i)   t_star^3 = id
  (ii)  t_lower^3 = id
  (iii) t_star . p_star_up = p_star_up
  (iv)  p_star_down . t_lower = p_star_down
  (v)   t_lower . t_star = id
  (vi)  p_star_up . p_star_down = 1 + t_star + t_star^2

constant_z3 is the constant functor at Z/3: both levels one-dimensional, all
structure maps the identity except the transfer, which is multiplication by
|C3| = 3 = 0 in F3.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np


def _mat(rows, shape: tuple[int, int]) -> np.ndarray:
    a = np.asarray(rows, dtype=np.int64) % 3
    if a.size == 0:
        a = a.reshape(shape)
    assert a.shape == shape, f"expected shape {shape}, got {a.shape}"
    return a.astype(np.uint8)


@dataclass
class MackeyFunctorC3:
    m_orbit: int  # dim of M(C3/e)
    m_point: int  # dim of M(C3/C3)
    p_star_up: np.ndarray = field(repr=False)  # M(*) -> M(C3), restriction
    p_star_down: np.ndarray = field(repr=False)  # M(C3) -> M(*), transfer
    t_star: np.ndarray = field(repr=False)  # Weyl action on M(C3)
    t_lower: np.ndarray = field(repr=False)  # inverse-direction Weyl action

    def __init__(self, m_orbit, m_point, p_star_up, p_star_down, t_star, t_lower):
        self.m_orbit = m_orbit
        self.m_point = m_point
        self.p_star_up = _mat(p_star_up, (m_orbit, m_point))
        self.p_star_down = _mat(p_star_down, (m_point, m_orbit))
        self.t_star = _mat(t_star, (m_orbit, m_orbit))
        self.t_lower = _mat(t_lower, (m_orbit, m_orbit))

    def verify_axioms(self) -> list[tuple[str, bool]]:
        """Check all six axioms; returns (axiom_id, holds) pairs in order."""

        def mm(*mats) -> np.ndarray:
            acc = mats[0].astype(np.int64)
            for m in mats[1:]:
                acc = (acc @ m.astype(np.int64)) % 3
            return acc % 3

        eye_o = np.eye(self.m_orbit, dtype=np.int64)
        ts, tl = self.t_star, self.t_lower
        pu, pd = self.p_star_up, self.p_star_down
        checks = [
            ("i", np.array_equal(mm(ts, ts, ts), eye_o)),
            ("ii", np.array_equal(mm(tl, tl, tl), eye_o)),
            ("iii", np.array_equal(mm(ts, pu), pu.astype(np.int64) % 3)),
            ("iv", np.array_equal(mm(pd, tl), pd.astype(np.int64) % 3)),
            ("v", np.array_equal(mm(tl, ts), eye_o)),
            ("vi", np.array_equal(mm(pu, pd), (eye_o + mm(ts) + mm(ts, ts)) % 3)),
        ]
        return checks

    def passes(self) -> bool:
        return all(ok for _, ok in self.verify_axioms())

    @staticmethod
    def constant_z3() -> "MackeyFunctorC3":
        """The constant Mackey functor at Z/3: transfer is multiplication by 3 = 0."""
        return MackeyFunctorC3(
            m_orbit=1,
            m_point=1,
            p_star_up=[[1]],
            p_star_down=[[0]],
            t_star=[[1]],
            t_lower=[[1]],
        )

    @staticmethod
    def free_orbit_z3() -> "MackeyFunctorC3":
        """The orbit functor Z/3[C3] at the orbit level: permutation Weyl action.

        Restriction is the diagonal, transfer sums the coordinates.
        """
        perm = [[0, 0, 1], [1, 0, 0], [0, 1, 0]]
        return MackeyFunctorC3(
            m_orbit=3,
            m_point=1,
            p_star_up=[[1], [1], [1]],
            p_star_down=[[1, 1, 1]],
            t_star=perm,
            t_lower=[[0, 1, 0], [0, 0, 1], [1, 0, 0]],
        )

    @staticmethod
    def axiom_failure_example() -> "MackeyFunctorC3":
        """A near-miss functor: t_star = id but t_lower = 2*id breaks (v).

        Useful as the negative control for verify_axioms: axioms (i)-(iv) and
        (vi) hold, (ii) fails since 2^3 = 8 = 2 != 1, and (v) fails since
        2*1 != 1.
        """
        return MackeyFunctorC3(
            m_orbit=1,
            m_point=1,
            p_star_up=[[1]],
            p_star_down=[[0]],
            t_star=[[1]],
            t_lower=[[2]],
        )
