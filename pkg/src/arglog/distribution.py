"""Direct distribution semantics: total choices, induced programs, success probability."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Iterator

from .errors import CapExceeded
from .model import Atom, GroundProgram, ProbFact, Rule
from .wfm import succeeds, well_founded_model

TotalChoice = frozenset  # the frozenset of probabilistic-fact atoms chosen true


def induced_program(total_choice: frozenset[Atom], gp: GroundProgram) -> frozenset[Rule]:
    """The program's rules plus one fact per chosen atom."""
    return gp.rules | frozenset(Rule(atom) for atom in total_choice)


def program_probability(total_choice: frozenset[Atom], pfacts: Iterable[ProbFact]) -> Fraction:
    """Probability of the induced program: chosen facts contribute p, the rest 1-p."""
    prob = Fraction(1)
    for pf in pfacts:
        prob *= pf.prob if pf.atom in total_choice else 1 - pf.prob
    return prob


def total_choices(
    pfacts: Iterable[ProbFact], max_pfacts: int = 24
) -> Iterator[tuple[frozenset[Atom], Fraction]]:
    """All subsets of the probabilistic-fact atoms with their probabilities."""
    pfacts = sorted(pfacts)
    if len(pfacts) > max_pfacts:
        raise CapExceeded(
            f"{len(pfacts)} probabilistic facts exceed the enumeration cap of {max_pfacts}"
        )
    atoms = sorted(pf.atom for pf in pfacts)
    for mask in range(2 ** len(atoms)):
        choice = frozenset(a for i, a in enumerate(atoms) if mask >> i & 1)
        yield choice, program_probability(choice, pfacts)


def success_probability(query: Atom, gp: GroundProgram, max_pfacts: int = 24) -> Fraction:
    """Exact probability mass of the total choices whose induced program makes
    some ground instance of the query true in its well-founded model.

    Zero-probability choices are skipped; they contribute nothing.
    """
    total = Fraction(0)
    for choice, prob in total_choices(gp.pfacts, max_pfacts):
        if not prob:
            continue
        model = well_founded_model(induced_program(choice, gp), gp.herbrand_base)
        if succeeds(model, query):
            total += prob
    return total
