"""The maps between a lattice and the ideals of its join-irreducibles.

``eta`` sends an element to the join-irreducibles below it and ``theta``
sends an ideal of join-irreducibles to its join. For a distributive
lattice with a bottom whose intervals are finite they are inverse
isomorphisms; :func:`verify_representation` checks this exhaustively and
does not assume distributivity, so it also exposes the failures on
non-distributive inputs.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import NotAnIdeal, NotDistributive
from .lattice import FiniteLattice, is_distributive, join_irreducibles
from .lazy import IdealLattice
from .poset import FinitePoset, OrderIdeal, enumerate_order_ideals, is_order_ideal

FLAGS = (
    "eta_injective",
    "eta_surjective_onto_finite_ideals",
    "eta_monotone",
    "theta_monotone",
    "round_trip_element_ok",
    "round_trip_ideal_ok",
)


@dataclass
class RepresentationReport:
    eta_injective: bool = True
    eta_surjective_onto_finite_ideals: bool = True
    eta_monotone: bool = True
    theta_monotone: bool = True
    round_trip_element_ok: bool = True
    round_trip_ideal_ok: bool = True
    witnesses: list = field(default_factory=list)
    elements: int = 0
    irreducibles: int = 0
    ideals: int = 0

    @property
    def ok(self) -> bool:
        return all(getattr(self, f) for f in FLAGS)

    def fail(self, flag, witness):
        setattr(self, flag, False)
        self.witnesses.append(f"{flag}: {witness}")

    def failed_flags(self) -> list[str]:
        return [f for f in FLAGS if not getattr(self, f)]

    def to_kv(self) -> str:
        lines = [f"{f}={str(getattr(self, f)).lower()}" for f in FLAGS]
        lines += [
            f"elements={self.elements}",
            f"irreducibles={self.irreducibles}",
            f"ideals={self.ideals}",
            f"witnesses={len(self.witnesses)}",
            f"ok={str(self.ok).lower()}",
        ]
        return "\n".join(lines)

    def to_text(self) -> str:
        head = "representation: " + ("isomorphism confirmed" if self.ok else "FAILED")
        lines = [
            head,
            f"  {self.elements} elements, {self.irreducibles} join-irreducibles, "
            f"{self.ideals} ideals of the join-irreducibles",
        ]
        for f in FLAGS:
            lines.append(f"  {f:<34} {'pass' if getattr(self, f) else 'FAIL'}")
        if self.witnesses:
            lines.append("  witnesses:")
            lines.extend(f"    {w}" for w in self.witnesses)
        return "\n".join(lines)


def _incidence(ideals, width):
    inc = np.zeros((len(ideals), width), dtype=np.int64)
    for r, ideal in enumerate(ideals):
        inc[r, list(ideal.members)] = 1
    return inc


def _subset_matrix(inc):
    return (inc @ (1 - inc).T) == 0


def _ideal_str(labels) -> str:
    return "{" + " ".join(labels) + "}"


def eta(L: FiniteLattice, x: str) -> OrderIdeal:
    """Join-irreducibles of ``L`` below ``x``, as an ideal of the irreducible poset."""
    J = join_irreducibles(L)
    return _eta(L, J, L.index(x))


def _eta(L, J, xi):
    members = frozenset(n for n, lab in enumerate(J.labels) if L.leq[L.index(lab), xi])
    return OrderIdeal(J, members)


def theta(L: FiniteLattice, S) -> str:
    """Join of an ideal of join-irreducibles; the empty ideal maps to the bottom.

    ``S`` may be an :class:`OrderIdeal` or a plain collection of labels.
    """
    J = join_irreducibles(L)
    labels = S.labels if isinstance(S, OrderIdeal) else frozenset(S)
    missing = [x for x in labels if x not in J]
    if missing:
        raise NotAnIdeal(f"{sorted(missing)} are not join-irreducible")
    if not is_order_ideal(J, labels):
        raise NotAnIdeal(f"{_ideal_str(sorted(labels))} is not downward closed")
    return L.join_all(labels)


def verify_representation(L: FiniteLattice, budget: int | None = None) -> RepresentationReport:
    J = join_irreducibles(L)
    ideals = enumerate_order_ideals(J, budget=budget)
    rep = RepresentationReport(elements=len(L), irreducibles=len(J), ideals=len(ideals))
    lab = L.labels

    etas = [_eta(L, J, xi) for xi in range(len(L))]
    seen = {}
    for xi, e in enumerate(etas):
        if e.members in seen:
            rep.fail("eta_injective", f"{lab[seen[e.members]]} and {lab[xi]} both map to {e.canonical}")
        else:
            seen[e.members] = xi
    for S in ideals:
        if S.members not in seen:
            rep.fail("eta_surjective_onto_finite_ideals", f"no element maps to {S.canonical}")

    eta_inc = _incidence(etas, len(J))
    bad = np.argwhere(L.leq & ~_subset_matrix(eta_inc))
    for a, b in bad[:5]:
        rep.fail("eta_monotone", f"{lab[a]} <= {lab[b]} but eta({lab[a]}) is not inside eta({lab[b]})")

    for xi, e in enumerate(etas):
        back = L.join_all(J.labels[n] for n in e.members)
        if back != lab[xi]:
            rep.fail("round_trip_element_ok", f"theta(eta({lab[xi]})) = {back}")

    thetas = np.array(
        [L.index(L.join_all(J.labels[n] for n in S.members)) for S in ideals], dtype=np.intp
    )
    for S, xi in zip(ideals, thetas):
        back = etas[xi]
        if back.members != S.members:
            rep.fail(
                "round_trip_ideal_ok",
                f"eta(theta({S.canonical})) = eta({lab[xi]}) = {back.canonical}",
            )
    subset = _subset_matrix(_incidence(ideals, len(J)))
    bad = np.argwhere(subset & ~L.leq[np.ix_(thetas, thetas)])
    for s, t in bad[:5]:
        rep.fail(
            "theta_monotone",
            f"{ideals[s].canonical} inside {ideals[t].canonical} but "
            f"theta gives {lab[thetas[s]]}, {lab[thetas[t]]} out of order",
        )
    return rep


def ideal_lattice(P: FinitePoset, budget: int | None = None) -> FiniteLattice:
    """J(P): every order ideal of ``P``, ordered by inclusion, as a lattice."""
    return IdealLattice(enumerate_order_ideals(P, budget=budget)).as_lattice()


def reconstruct(L: FiniteLattice, budget: int | None = None):
    """Rebuild ``L`` as the ideal lattice of its join-irreducibles.

    Returns ``(ideal_lattice, iso)`` where ``iso`` maps every label of ``L``
    to its image ideal. Raises :class:`NotDistributive` otherwise.
    """
    witness = is_distributive(L)
    if witness is not True:
        raise NotDistributive(witness)
    J = join_irreducibles(L)
    lattice = IdealLattice(enumerate_order_ideals(J, budget=budget))
    iso = {x: _eta(L, J, L.index(x)) for x in L.labels}
    return lattice, iso


__all__ = [
    "RepresentationReport",
    "eta",
    "theta",
    "verify_representation",
    "ideal_lattice",
    "reconstruct",
]
