"""Report types shared by the recognition criteria and the geometry checks."""

from __future__ import annotations

from dataclasses import dataclass

# Fixed criterion order: reports are always assembled in this order, and
# consolidated runs execute them roughly by increasing cost.
CRITERIA = (
    "NonFacePartition",
    "SimplexLink",
    "TwoFace",
    "Recursive",
    "Double",
    "HochsterGF2",
    "HochsterQ",
    "Dihedral",
)


@dataclass
class RecognitionReport:
    """Verdict of a single criterion.

    ``verdict`` is None when the criterion was skipped (cap exceeded or
    precondition not met); then ``witness`` carries the reason.  A False
    verdict always carries a witness that an independent checker can
    re-verify against the input.
    """

    criterion: str
    verdict: bool | None
    witness: dict | None = None

    @property
    def skipped(self) -> bool:
        return self.verdict is None

    def to_json_dict(self) -> dict:
        return {
            "criterion": self.criterion,
            "verdict": self.verdict,
            "witness": self.witness,
        }
