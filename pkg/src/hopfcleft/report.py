"""Structured pass/fail reports produced by the axiom checkers."""

from __future__ import annotations

from dataclasses import dataclass, field

from .linalg import LinearMap


@dataclass
class CheckItem:
    name: str
    ok: bool
    witness: str | None = None

    def line(self) -> str:
        status = "pass" if self.ok else "FAIL"
        tail = f"  [{self.witness}]" if self.witness else ""
        return f"{self.name}: {status}{tail}"


@dataclass
class CheckReport:
    subject: str
    items: list[CheckItem] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(item.ok for item in self.items)

    def add(self, item: CheckItem) -> CheckItem:
        self.items.append(item)
        return item

    def extend(self, other: "CheckReport"):
        self.items.extend(other.items)

    def first_failure(self) -> CheckItem | None:
        return next((i for i in self.items if not i.ok), None)

    def lines(self) -> list[str]:
        return [f"{self.subject}:"] + ["  " + i.line() for i in self.items]

    def __str__(self) -> str:
        return "\n".join(self.lines())


def map_equal_item(name: str, lhs: LinearMap, rhs: LinearMap) -> CheckItem:
    """Compare two parallel maps; the witness is the first differing matrix entry."""
    diff = lhs - rhs
    if diff.is_zero():
        return CheckItem(name, True)
    (i, j) = min(diff.entries)
    witness = (
        f"at {lhs.source.labels[j]} -> {lhs.target.labels[i]}: "
        f"{lhs[(i, j)]} != {rhs[(i, j)]}"
    )
    return CheckItem(name, False, witness)
