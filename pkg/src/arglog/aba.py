"""Assumption-based argumentation framework built from a ground program.

The framework treats every negation-as-failure literal over the Herbrand base
as an assumption whose contrary is the underlying atom, and every
probabilistic-fact atom as an additional assumption whose contrary is the
reserved sentence FACT_CONTRARY ("_chi"). No rule can derive that sentence
(the parser rejects the "_" prefix), so fact assumptions are unattackable;
they are instead switched on and off by worlds in the probabilistic layer.

Arguments are identified with (assumptions, claim, rules) triples rather than
derivation trees: the attack relation only depends on the triple, and triples
stay finite even when trees do not (e.g. "p :- p." next to "p."). All triples
with a derivation are kept, not just subset-minimal ones, because distinct
derivations of one claim are counted separately by the per-argument
probability measure.
"""

from __future__ import annotations

import warnings
from collections import defaultdict
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import CapExceeded
from .model import Atom, GroundProgram, Literal, Rule

FACT_CONTRARY = Literal(Atom("_chi"))


@dataclass(frozen=True)
class AbaFramework:
    """A flat framework: rules, plus assumptions derived from the base."""

    rules: frozenset[Rule]
    herbrand_base: frozenset[Atom]
    fact_assumptions: frozenset[Atom]

    @property
    def assumptions(self) -> frozenset[Literal]:
        naf = {Literal(atom, negated=True) for atom in self.herbrand_base}
        return frozenset(naf | {Literal(atom) for atom in self.fact_assumptions})

    @property
    def language(self) -> frozenset[Literal]:
        sentences = {Literal(atom) for atom in self.herbrand_base}
        sentences |= {Literal(atom, negated=True) for atom in self.herbrand_base}
        sentences.add(FACT_CONTRARY)
        return frozenset(sentences)

    def contrary_of(self, assumption: Literal) -> Literal:
        """Total map from assumptions to their contraries."""
        if assumption.negated:
            return Literal(assumption.atom)
        if assumption.atom in self.fact_assumptions:
            return FACT_CONTRARY
        raise KeyError(f"{assumption} is not an assumption of this framework")

    def contraries(self) -> list[tuple[Literal, Literal]]:
        return [(a, self.contrary_of(a)) for a in sorted(self.assumptions)]


@dataclass(frozen=True)
class Argument:
    """A canonical (assumptions, claim, rules) triple standing for a derivation tree."""

    assumptions: frozenset[Literal]
    claim: Literal
    rules_used: frozenset[Rule]

    @property
    def fact_support(self) -> frozenset[Atom]:
        """Atoms of the positive assumptions, i.e. the fact assumptions used."""
        return frozenset(lit.atom for lit in self.assumptions if not lit.negated)

    def __str__(self) -> str:
        support = ", ".join(str(a) for a in sorted(self.assumptions))
        return f"{{{support}}} ⊢ {self.claim}"


def argument_sort_key(arg: Argument):
    return (arg.claim, tuple(sorted(arg.assumptions)), tuple(sorted(arg.rules_used)))


@dataclass(frozen=True)
class AaFramework:
    """Abstract view: indexed arguments plus attack pairs between indices."""

    arguments: tuple[Argument, ...]
    attacks: frozenset[tuple[int, int]]


def build_problog_aba(gp: GroundProgram) -> AbaFramework:
    """The framework corresponding to a ground program: rules stay as given,
    probabilistic-fact atoms become fact assumptions.

    Flatness is guaranteed upstream: validation rejects programs where a
    probabilistic-fact atom unifies with a rule head, and negation-as-failure
    literals can never be rule heads.
    """
    if not gp.herbrand_base:
        warnings.warn(
            "degenerate framework: the program has an empty Herbrand base, "
            "so the assumption set is empty",
            stacklevel=2,
        )
    return AbaFramework(
        rules=gp.rules,
        herbrand_base=gp.herbrand_base,
        fact_assumptions=gp.fact_atoms,
    )


def enumerate_arguments(
    framework: AbaFramework, max_arguments: int = 100_000
) -> frozenset[Argument]:
    """All argument triples admitting a derivation tree, by saturation.

    Seeds: one argument ({a}, a, {}) per assumption a, and one ({}, h, {r})
    per bodyless rule r. A rule h :- b1, ..., bm combines any already-found
    arguments for the body sentences into an argument for h, taking unions of
    their supports and rule sets. Rounds are semi-naive: a combination is
    retried only when it can involve an argument found in the previous round.
    The triple space is finite, so saturation terminates; the count guard
    refuses pathological blow-ups instead of truncating.
    """
    found: set[Argument] = set()
    by_claim: dict[Literal, list[Argument]] = defaultdict(list)

    def add(arg: Argument) -> bool:
        if arg in found:
            return False
        found.add(arg)
        if len(found) > max_arguments:
            raise CapExceeded(
                f"argument saturation exceeds the cap of {max_arguments} arguments"
            )
        by_claim[arg.claim].append(arg)
        return True

    frontier: list[Argument] = []
    for assumption in sorted(framework.assumptions):
        arg = Argument(frozenset({assumption}), assumption, frozenset())
        if add(arg):
            frontier.append(arg)
    rules_with_body: list[Rule] = []
    for rule in sorted(framework.rules):
        if rule.is_fact:
            arg = Argument(frozenset(), Literal(rule.head), frozenset({rule}))
            if add(arg):
                frontier.append(arg)
        else:
            rules_with_body.append(rule)

    while frontier:
        frontier_set = frozenset(frontier)
        candidates = {claim: tuple(args) for claim, args in by_claim.items()}
        next_frontier: list[Argument] = []
        for rule in rules_with_body:
            pools = [candidates.get(lit, ()) for lit in rule.body]
            if any(not pool for pool in pools):
                continue
            for combo in product(*pools):
                if frontier_set.isdisjoint(combo):
                    continue
                support = frozenset().union(*(sub.assumptions for sub in combo))
                used = frozenset({rule}).union(*(sub.rules_used for sub in combo))
                arg = Argument(support, Literal(rule.head), used)
                if add(arg):
                    next_frontier.append(arg)
        frontier = next_frontier
    return frozenset(found)


def compute_attacks(
    framework: AbaFramework, arguments: Sequence[Argument]
) -> frozenset[tuple[int, int]]:
    """All pairs (i, j) where argument i's claim is the contrary of an
    assumption supporting argument j. Self-attacks included."""
    targets: dict[Literal, list[int]] = defaultdict(list)
    for j, arg in enumerate(arguments):
        for assumption in arg.assumptions:
            targets[framework.contrary_of(assumption)].append(j)
    attacks: set[tuple[int, int]] = set()
    for i, arg in enumerate(arguments):
        for j in targets.get(arg.claim, ()):
            attacks.add((i, j))
    return frozenset(attacks)


def build_aa_framework(
    framework: AbaFramework, max_arguments: int = 100_000
) -> AaFramework:
    """Enumerate arguments in canonical order and derive the attack relation."""
    arguments = tuple(
        sorted(enumerate_arguments(framework, max_arguments), key=argument_sort_key)
    )
    return AaFramework(arguments, compute_attacks(framework, arguments))
