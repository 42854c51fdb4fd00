"""Report models returned by the verification operations."""

from typing import List, Optional

from pydantic import BaseModel


class CheckResult(BaseModel):
    """Outcome of one identity check."""

    name: str
    identity: str
    passed: bool
    order: Optional[int] = None
    # first offending coefficient/key, empty when passed
    counterexample: Optional[str] = None
    detail: Optional[str] = None
    # soft checks are reported but never fail a suite
    soft: bool = False


class SuiteReport(BaseModel):
    suite: str
    order: int
    seed: Optional[int] = None
    results: List[CheckResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results if not r.soft)

    def failures(self) -> List[CheckResult]:
        return [r for r in self.results if not r.passed and not r.soft]
