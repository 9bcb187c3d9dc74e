"""Logic-program semantics: well-founded model, least model, stable models.

The well-founded model is computed by Van Gelder's alternating fixpoint.
Writing G(I) for the least model of the reduct of the program with respect to
interpretation I, the sequence

    K(0) = G(base),  U(i) = G(K(i)),  K(i+1) = G(U(i))

produces an increasing chain of surely-true sets K and a decreasing chain of
possibly-true sets U. At the (guaranteed) fixpoint, K holds the true atoms
and everything outside U is false; the remainder is undefined.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import CapExceeded
from .model import Atom, Rule, matches


@dataclass(frozen=True)
class ThreeValuedModel:
    """Partition of the Herbrand base into true / false / undefined atoms."""

    true_atoms: frozenset[Atom]
    false_atoms: frozenset[Atom]
    undefined_atoms: frozenset[Atom]

    def __post_init__(self):
        if (
            self.true_atoms & self.false_atoms
            or self.true_atoms & self.undefined_atoms
            or self.false_atoms & self.undefined_atoms
        ):
            raise ValueError("model sections must be pairwise disjoint")

    @property
    def is_two_valued(self) -> bool:
        return not self.undefined_atoms


def least_model(rules: Iterable[Rule]) -> frozenset[Atom]:
    """Least Herbrand model of a definite ground program (one-step fixpoint)."""
    pending = list(rules)
    for rule in pending:
        if any(lit.negated for lit in rule.body):
            raise ValueError(f"rule '{rule}' is not definite")
    derived: set[Atom] = set()
    changed = True
    while changed:
        changed = False
        remaining = []
        for rule in pending:
            if all(lit.atom in derived for lit in rule.body):
                if rule.head not in derived:
                    derived.add(rule.head)
                    changed = True
            else:
                remaining.append(rule)
        pending = remaining
    return frozenset(derived)


def reduct(rules: Iterable[Rule], interpretation: frozenset[Atom]) -> frozenset[Rule]:
    """Gelfond-Lifschitz reduct: drop rules blocked by the interpretation,
    strip negative literals from the rest."""
    out: set[Rule] = set()
    for rule in rules:
        if any(lit.negated and lit.atom in interpretation for lit in rule.body):
            continue
        out.add(Rule(rule.head, tuple(lit for lit in rule.body if not lit.negated)))
    return frozenset(out)


def well_founded_model(rules: Iterable[Rule], base: Iterable[Atom]) -> ThreeValuedModel:
    """The unique well-founded model of a ground normal program over `base`."""
    rules = frozenset(rules)
    base = frozenset(base)
    sure: frozenset[Atom] = frozenset()
    possible: frozenset[Atom] = base
    # the sure set strictly grows until the fixpoint, so |base|+1 rounds suffice
    for _ in range(len(base) + 2):
        next_sure = least_model(reduct(rules, possible))
        next_possible = least_model(reduct(rules, next_sure))
        if (next_sure, next_possible) == (sure, possible):
            break
        sure, possible = next_sure, next_possible
    else:  # pragma: no cover - the alternating fixpoint provably converges
        raise RuntimeError("alternating fixpoint failed to converge")
    return ThreeValuedModel(
        true_atoms=sure,
        false_atoms=base - possible,
        undefined_atoms=possible - sure,
    )


def stable_models(
    rules: Iterable[Rule],
    base: Iterable[Atom],
    max_atoms: int = 20,
) -> frozenset[frozenset[Atom]]:
    """All stable models, by exhaustive search over interpretations.

    A desk-scale cross-check: M is stable iff it equals the least model of
    the reduct with respect to M. Refuses bases larger than `max_atoms`.
    """
    rules = frozenset(rules)
    atoms = sorted(frozenset(base))
    if len(atoms) > max_atoms:
        raise CapExceeded(
            f"stable-model search over {len(atoms)} atoms exceeds the cap of {max_atoms}"
        )
    found: set[frozenset[Atom]] = set()
    for mask in range(2 ** len(atoms)):
        candidate = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
        if least_model(reduct(rules, candidate)) == candidate:
            found.add(candidate)
    return frozenset(found)


def succeeds(model: ThreeValuedModel, query: Atom) -> bool:
    """Whether some ground instance of the query is true in the model.

    Undefined does not count as success. Matching against the true atoms is
    equivalent to instantiating the query over the full base first.
    """
    if query.is_ground:
        return query in model.true_atoms
    return any(matches(query, atom) for atom in model.true_atoms)
