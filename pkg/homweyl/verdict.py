"""
Results of structure checks and verification suites
"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass(frozen=True)
class Witness:
    """The inputs on which a property failed, with what was expected and what came out"""

    inputs: Dict[str, str]
    expected: str
    actual: str

    def to_dict(self) -> Dict[str, Any]:
        return {'inputs': dict(self.inputs), 'expected': self.expected, 'actual': self.actual}


@dataclass(frozen=True)
class Verdict:
    """PASS/FAIL outcome of a check; a FAIL always carries a witness"""

    suite_name: str
    passed: bool
    witness: Optional[Witness] = None
    clause: Optional[str] = None
    notes: List[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.passed and self.witness is None:
            raise ValueError(f"{self.suite_name}: a failing verdict needs a witness")

    @classmethod
    def ok(cls, suite_name: str, notes: Optional[List[str]] = None) -> 'Verdict':
        return cls(suite_name, True, notes=list(notes or []))

    @classmethod
    def fail(cls, suite_name: str, witness: Witness, clause: Optional[str] = None,
             notes: Optional[List[str]] = None) -> 'Verdict':
        return cls(suite_name, False, witness=witness, clause=clause, notes=list(notes or []))

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def to_dict(self) -> Dict[str, Any]:
        return {
            'suite': self.suite_name,
            'passed': self.passed,
            'clause': self.clause,
            'witness': self.witness.to_dict() if self.witness else None,
            'notes': list(self.notes),
        }
