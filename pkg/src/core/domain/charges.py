"""Discharging models: rule sets, charge states and audit reports."""

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction


class RuleSetId(str, Enum):
    """Discharging rule sets.

    Attributes:
        T4: Light edges when Delta >= 7.
        L5: The three Delta = 6 configurations.
        L6_D5: Degree-sum <= 8 edges when Delta = 5.
        T7: Light edges or 2-alternating cycles when Delta >= 9 (uses a bank).
    """

    T4 = "t4"
    L5 = "l5"
    L6_D5 = "l6"
    T7 = "t7"

    @property
    def label(self) -> str:
        return self.name


@dataclass
class ChargeState:
    """Exact charges per vertex and per face, plus an optional bank.

    Attributes:
        vertex_charge: Charge of every vertex.
        face_charge: Charge of every traced face, keyed by face id.
        bank: Bank balance; None for rule sets without a bank.
    """

    vertex_charge: dict[int, Fraction] = field(default_factory=dict)
    face_charge: dict[int, Fraction] = field(default_factory=dict)
    bank: Fraction | None = None

    def total(self) -> Fraction:
        total = sum(self.vertex_charge.values(), Fraction(0))
        total += sum(self.face_charge.values(), Fraction(0))
        if self.bank is not None:
            total += self.bank
        return total


@dataclass(frozen=True)
class PreconditionCheck:
    """One hypothesis of a rule set's minimal-counterexample argument."""

    name: str
    holds: bool


@dataclass
class AuditReport:
    """Result of running a rule set on one graph.

    Attributes:
        ruleset: Rule set that was applied.
        initial: Charges before discharging.
        final: Charges after discharging.
        negatives: Elements left with negative charge, as ``v <id>``, ``f <id>`` or ``bank``.
        preconditions: Counterexample hypotheses and whether the graph meets them.
    """

    ruleset: RuleSetId
    initial: ChargeState
    final: ChargeState
    negatives: list[str]
    preconditions: list[PreconditionCheck]

    @property
    def total(self) -> Fraction:
        return self.final.total()

    @property
    def conserved(self) -> bool:
        return self.initial.total() == self.final.total()

    @property
    def strictly_positive_element_exists(self) -> bool:
        charges = [*self.final.vertex_charge.values(), *self.final.face_charge.values()]
        if self.final.bank is not None:
            charges.append(self.final.bank)
        return any(c > 0 for c in charges)

    @property
    def failed_preconditions(self) -> list[str]:
        return [p.name for p in self.preconditions if not p.holds]

    def summary(self) -> dict[str, object]:
        """Compact JSON-friendly digest used as error diagnostics."""
        return {
            "ruleset": self.ruleset.label,
            "total": str(self.total),
            "negatives": self.negatives[:20],
            "failed_preconditions": self.failed_preconditions,
            "strictly_positive": self.strictly_positive_element_exists,
        }
