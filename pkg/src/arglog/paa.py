"""Probabilistic layer over the argumentation view of a ground program.

Worlds are subsets of the fact-assumption atoms; each world keeps exactly the
arguments whose fact support it contains, and the grounded extension of that
restricted framework decides acceptance. Probabilities of acceptance are
exact rational sums of world probabilities.

Per-world evaluation is pure and independent, so worlds may be evaluated
concurrently; results are combined by exact rational addition, which is
order-independent. Distinct worlds that keep the same argument set induce
the same restricted framework, so extensions are cached by that signature.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .aba import AaFramework, Argument, build_aa_framework, build_problog_aba
from .errors import CapExceeded
from .limits import Caps
from .model import Atom, GroundProgram, Literal, ProbFact, matches
from .semantics import attacker_map, grounded_extension_of

World = frozenset  # a world is the frozenset of chosen fact atoms


def world_probability(world: frozenset[Atom], pfacts: Iterable[ProbFact]) -> Fraction:
    """Product of p over chosen facts and (1-p) over the rest; exact."""
    prob = Fraction(1)
    for pf in pfacts:
        prob *= pf.prob if pf.atom in world else 1 - pf.prob
    return prob


def world_table(
    pfacts: Iterable[ProbFact], max_pfacts: int = 24
) -> list[tuple[frozenset[Atom], Fraction]]:
    """All 2**n worlds with their probabilities, in a fixed subset order.

    Probabilities sum to exactly 1. Refuses more than `max_pfacts` facts.
    """
    pfacts = sorted(pfacts)
    if len(pfacts) > max_pfacts:
        raise CapExceeded(
            f"{len(pfacts)} probabilistic facts exceed the world-enumeration "
            f"cap of {max_pfacts} (2**{len(pfacts)} worlds)"
        )
    atoms = sorted(pf.atom for pf in pfacts)
    table = []
    for mask in range(2 ** len(atoms)):
        world = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
        table.append((world, world_probability(world, pfacts)))
    return table


def applicable(world: frozenset[Atom], argument: Argument) -> bool:
    """An argument applies in a world iff the world chose all its fact assumptions."""
    return argument.fact_support <= world


def restrict(aaf: AaFramework, world: frozenset[Atom]) -> AaFramework:
    """The framework with respect to a world: applicable arguments only,
    attacks restricted to the survivors (indices are compacted)."""
    keep = [i for i, arg in enumerate(aaf.arguments) if applicable(world, arg)]
    renumber = {old: new for new, old in enumerate(keep)}
    attacks = frozenset(
        (renumber[i], renumber[j])
        for i, j in aaf.attacks
        if i in renumber and j in renumber
    )
    return AaFramework(tuple(aaf.arguments[i] for i in keep), attacks)


class PaaEngine:
    """Grounded-semantics probabilities of arguments and queries for one program."""

    def __init__(self, gp: GroundProgram, caps: Caps = Caps()):
        self.gp = gp
        self.caps = caps
        self.framework = build_problog_aba(gp)
        self.aaf = build_aa_framework(self.framework, caps.max_arguments)
        self._attackers = attacker_map(self.aaf)
        self._extension_cache: dict[frozenset[int], frozenset[int]] = {}

    def worlds(self) -> list[tuple[frozenset[Atom], Fraction]]:
        return world_table(self.gp.pfacts, self.caps.max_pfacts)

    def applicable_indices(self, world: frozenset[Atom]) -> frozenset[int]:
        return frozenset(
            i for i, arg in enumerate(self.aaf.arguments) if applicable(world, arg)
        )

    def grounded_indices(self, world: frozenset[Atom]) -> frozenset[int]:
        """Grounded extension of the world's framework, as original indices."""
        active = self.applicable_indices(world)
        cached = self._extension_cache.get(active)
        if cached is None:
            cached = grounded_extension_of(active, self._attackers)
            self._extension_cache[active] = cached
        return cached

    def accepted_claims(self, world: frozenset[Atom]) -> frozenset[Literal]:
        return frozenset(
            self.aaf.arguments[i].claim for i in self.grounded_indices(world)
        )

    def evaluations(self) -> Iterator[tuple[frozenset[Atom], Fraction, frozenset[int]]]:
        """(world, probability, accepted indices) for every world."""
        for world, prob in self.worlds():
            yield world, prob, self.grounded_indices(world)

    def grounded_prob_argument(self, argument: Argument) -> Fraction:
        """Probability mass of worlds whose grounded extension holds the argument."""
        try:
            index = self.aaf.arguments.index(argument)
        except ValueError:
            raise KeyError(f"{argument} is not an argument of this framework") from None
        total = Fraction(0)
        for world, prob, accepted in self.evaluations():
            if prob and index in accepted:
                total += prob
        return total

    def _instance_atoms(self, query: Atom) -> frozenset[Atom]:
        if query.is_ground:
            return frozenset({query} & self.gp.herbrand_base)
        return frozenset(a for a in self.gp.herbrand_base if matches(query, a))

    def query_argument_indices(self, query: Atom) -> frozenset[int]:
        """Indices of arguments whose claim is an instance of the query atom."""
        instances = self._instance_atoms(query)
        return frozenset(
            i
            for i, arg in enumerate(self.aaf.arguments)
            if not arg.claim.negated and arg.claim.atom in instances
        )

    def grounded_prob_query(self, query: Atom) -> Fraction:
        """Probability mass of worlds accepting at least one argument claiming
        (an instance of) the query; each world counted once."""
        claiming = self.query_argument_indices(query)
        total = Fraction(0)
        for world, prob, accepted in self.evaluations():
            if prob and not claiming.isdisjoint(accepted):
                total += prob
        return total

    def argument_probability_sum(self, query: Atom) -> Fraction:
        """Sum of per-argument probabilities over all arguments claiming the
        query; counts a world once per accepted argument, so it can exceed
        the query probability."""
        claiming = self.query_argument_indices(query)
        total = Fraction(0)
        for world, prob, accepted in self.evaluations():
            if prob:
                total += prob * len(claiming & accepted)
        return total
