"""Checkers for the cocircuit axioms (C0)-(C3)."""

from core.config import logger
from core.exceptions import HypothesisNotMet
from models.sign_system import SignSystem
from models.sign_vector import iter_bits
from schemas.verdict import Axiom, AxiomViolation, Verdict


class AxiomService:
    """
    Cocircuit axiom checks with canonical witnesses.

    Every check scans members in canonical order and reports the first violating tuple,
    so witnesses are reproducible. ``inspections`` holds the number of candidate
    eliminations inspected by the last (C3) check.
    """

    def __init__(self) -> None:
        self.inspections = 0

    def check_c0(self, system: SignSystem) -> Verdict:
        """The zero vector is not a cocircuit."""
        if any(vector.is_zero for vector in system):
            return Verdict.fail(
                "C0",
                AxiomViolation(rule=Axiom.C0, message="the zero vector is a member"),
            )
        return Verdict.ok("C0")

    def check_c1(self, system: SignSystem) -> Verdict:
        """The system is closed under negation."""
        for vector in system:
            if -vector not in system:
                return Verdict.fail(
                    "C1",
                    AxiomViolation(
                        rule=Axiom.C1,
                        vectors=[str(vector)],
                        message=f"-{vector} is missing",
                    ),
                )
        return Verdict.ok("C1")

    def check_c2(self, system: SignSystem) -> Verdict:
        """No support is contained in another one, except for X = ±Y."""
        for x in system:
            for y in system:
                if y == x or y == -x:
                    continue
                if not x.support_mask & ~y.support_mask:
                    return Verdict.fail(
                        "C2",
                        AxiomViolation(
                            rule=Axiom.C2,
                            vectors=[str(x), str(y)],
                            message=f"support of {x} lies inside support of {y}",
                        ),
                    )
        return Verdict.ok("C2")

    def check_c3(self, system: SignSystem) -> Verdict:
        """
        Elimination: for X ≠ ±Y and e ∈ S(X, Y) some Z vanishes at e and conforms to X ∪ Y.

        Reference triple loop. Every candidate Z is inspected for every (X, Y, e); each
        inspection adds one to ``inspections``.
        """
        self.inspections = 0
        members = system.members
        for x in members:
            for y in members:
                if y == x or y == -x:
                    continue
                pos_union = x.pos | y.pos
                neg_union = x.neg | y.neg
                for e in iter_bits(x.separator_mask(y)):
                    bit = 1 << e
                    found = False
                    for z in members:
                        self.inspections += 1
                        if (
                            not (z.pos | z.neg) & bit
                            and not z.pos & ~pos_union
                            and not z.neg & ~neg_union
                        ):
                            found = True
                    if not found:
                        return Verdict.fail(
                            "C3",
                            AxiomViolation(
                                rule=Axiom.C3,
                                vectors=[str(x), str(y)],
                                element=e,
                                element_label=system.ground.labels[e],
                                message=f"no member eliminates {system.ground.labels[e]}",
                            ),
                            cost=self.inspections,
                        )
        return Verdict.ok("C3", cost=self.inspections)

    def check_hypothesis(self, system: SignSystem) -> Verdict:
        """(C0)-(C2), the common precondition of the graph conditions."""
        for check in (self.check_c0, self.check_c1, self.check_c2):
            verdict = check(system)
            if not verdict.passed:
                return verdict.model_copy(update={"check": "hypothesis"})
        return Verdict.ok("hypothesis")

    def require_hypothesis(self, system: SignSystem) -> None:
        verdict = self.check_hypothesis(system)
        if not verdict.passed:
            assert verdict.violation is not None
            raise HypothesisNotMet(
                f"Input violates {verdict.violation.rule}: {verdict.violation.message}"
            )

    def check_all(self, system: SignSystem) -> Verdict:
        """(C0)-(C3) in order; passing means the system is the cocircuit set of an OM."""
        warnings = []
        if not system.members:
            warnings.append("empty system accepted as the rank-0 oriented matroid")
            logger.warning("Empty sign system: all axioms hold vacuously (rank 0)")

        for check in (self.check_c0, self.check_c1, self.check_c2, self.check_c3):
            verdict = check(system)
            if not verdict.passed:
                logger.info(f"Axiom check failed at {verdict.check}")
                return verdict.model_copy(update={"check": "axioms"})
        return Verdict.ok("axioms", warnings=warnings, cost=self.inspections)
