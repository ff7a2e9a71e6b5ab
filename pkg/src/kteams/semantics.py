"""The satisfaction relation between K-teams and dependency atoms.

Quantification ranges over the team's own value universe: values that never
occur in a column have zero marginals on both sides of an atom and, given the
zero-min order and positivity, can never flip a verdict. Independence atoms
are checked on the candidate tuples assembled from support-row pairs agreeing
on the condition; every other assignment zeroes both sides of the product
identity (positivity again), so the identity holds there vacuously.
"""

from __future__ import annotations

from typing import Any, Iterable, Optional

from .atoms import CI, FD, IND, MI, MDE, INDStar, Atom
from .semirings import CapabilityError
from .teams import KTeam


def satisfies(team: KTeam, atom: Atom) -> bool:
    if isinstance(atom, FD):
        return _sat_fd(team, atom)
    if isinstance(atom, IND):
        return _sat_ind(team, atom)
    if isinstance(atom, MI):
        return _sat_mi(team, atom)
    if isinstance(atom, INDStar):
        return team.marginal_multiset(atom.rhs).includes(
            team.marginal_multiset(atom.lhs)
        )
    if isinstance(atom, MDE):
        return team.marginal_multiset(atom.lhs) == team.marginal_multiset(atom.rhs)
    if isinstance(atom, CI):
        return _sat_ci(team, atom)
    raise TypeError(f"not an atom: {atom!r}")


def satisfies_all(team: KTeam, atoms: Iterable[Atom]) -> bool:
    return all(satisfies(team, a) for a in atoms)


def _sat_fd(team: KTeam, atom: FD) -> bool:
    lp = team.positions(atom.lhs)
    rp = team.positions(atom.rhs)
    seen: dict[tuple, tuple] = {}
    for row in team.support():
        key = tuple(row[p] for p in lp)
        val = tuple(row[p] for p in rp)
        prev = seen.setdefault(key, val)
        if prev != val:
            return False
    return True


def _sat_ind(team: KTeam, atom: IND) -> bool:
    K = team.semiring
    if not K.flags.totally_zero_min_ordered:
        raise CapabilityError(
            f"inclusion atoms need a total zero-min order; {K.id} lacks one"
        )
    left = team.marginals(atom.lhs)
    right = team.marginals(atom.rhs)
    zero = K.zero
    for a, w in left.items():
        if w != zero and not K.le(w, right.get(a, zero)):
            return False
    return True


def _sat_mi(team: KTeam, atom: MI) -> bool:
    left = team.marginals(atom.lhs)
    right = team.marginals(atom.rhs)
    zero = team.semiring.zero
    for a in left.keys() | right.keys():
        if left.get(a, zero) != right.get(a, zero):
            return False
    return True


def _sat_ci(team: KTeam, atom: CI) -> bool:
    K = team.semiring
    zero = K.zero
    cp = team.positions(atom.cond)
    lp = team.positions(atom.left)
    rp = team.positions(atom.right)
    m_clr = team.marginals(atom.cond + atom.left + atom.right)
    m_c = team.marginals(atom.cond)
    m_cl = team.marginals(atom.cond + atom.left)
    m_cr = team.marginals(atom.cond + atom.right)
    support = team.support()
    by_cond: dict[tuple, list[tuple]] = {}
    for row in support:
        by_cond.setdefault(tuple(row[p] for p in cp), []).append(row)
    checked: set[tuple] = set()
    for c, rows in by_cond.items():
        for r1 in rows:
            l = tuple(r1[p] for p in lp)
            for r2 in rows:
                r = tuple(r2[p] for p in rp)
                key = c + l + r
                if key in checked:
                    continue
                checked.add(key)
                lhs = K.times(m_clr.get(key, zero), m_c.get(c, zero))
                rhs = K.times(m_cl.get(c + l, zero), m_cr.get(c + r, zero))
                if lhs != rhs:
                    return False
    return True


def failure_witness(team: KTeam, atom: Atom) -> Optional[dict[str, Any]]:
    """None when the atom holds, else a small description of the failure."""
    if satisfies(team, atom):
        return None
    K = team.semiring
    zero = K.zero
    if isinstance(atom, FD):
        lp = team.positions(atom.lhs)
        rp = team.positions(atom.rhs)
        seen: dict[tuple, tuple] = {}
        for row in team.support():
            key = tuple(row[p] for p in lp)
            prev = seen.setdefault(key, row)
            if tuple(prev[p] for p in rp) != tuple(row[p] for p in rp):
                return {
                    "agreeing_on": list(key),
                    "rows": [list(prev), list(row)],
                }
    if isinstance(atom, (IND, MI)):
        left = team.marginals(atom.lhs)
        right = team.marginals(atom.rhs)
        for a in left.keys() | right.keys():
            lw, rw = left.get(a, zero), right.get(a, zero)
            bad = (lw != rw) if isinstance(atom, MI) else (lw != zero and not K.le(lw, rw))
            if bad:
                return {
                    "value": list(a),
                    "left_marginal": K.format_literal(lw),
                    "right_marginal": K.format_literal(rw),
                }
    if isinstance(atom, (INDStar, MDE)):
        return {
            "left_multiset": repr(team.marginal_multiset(atom.lhs)),
            "right_multiset": repr(team.marginal_multiset(atom.rhs)),
        }
    if isinstance(atom, CI):
        cp = team.positions(atom.cond)
        lp = team.positions(atom.left)
        rp = team.positions(atom.right)
        m_clr = team.marginals(atom.cond + atom.left + atom.right)
        m_c = team.marginals(atom.cond)
        m_cl = team.marginals(atom.cond + atom.left)
        m_cr = team.marginals(atom.cond + atom.right)
        support = team.support()
        for r1 in support:
            c = tuple(r1[p] for p in cp)
            l = tuple(r1[p] for p in lp)
            for r2 in support:
                if tuple(r2[p] for p in cp) != c:
                    continue
                r = tuple(r2[p] for p in rp)
                key = c + l + r
                lhs = K.times(m_clr.get(key, zero), m_c.get(c, zero))
                rhs = K.times(m_cl.get(c + l, zero), m_cr.get(c + r, zero))
                if lhs != rhs:
                    return {
                        "value": dict(
                            zip(atom.cond + atom.left + atom.right, key)
                        ),
                        "joint_times_cond": K.format_literal(lhs),
                        "left_times_right": K.format_literal(rhs),
                    }
    return {"atom": repr(atom)}
