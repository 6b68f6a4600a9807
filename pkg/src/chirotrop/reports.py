from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification: ``ok`` plus details for humans and JSON."""

    name: str
    ok: bool = True
    summary: str = ""
    details: dict = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)

    def fail(self, message: str) -> None:
        self.ok = False
        self.failures.append(message)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "ok": self.ok,
            "summary": self.summary,
            "details": self.details,
            "failures": self.failures,
        }

    def __str__(self) -> str:
        head = f"[{'PASS' if self.ok else 'FAIL'}] {self.name}: {self.summary}"
        lines = [head]
        for key, val in self.details.items():
            lines.append(f"  {key}: {val}")
        for f in self.failures[:20]:
            lines.append(f"  ! {f}")
        if len(self.failures) > 20:
            lines.append(f"  ! ... {len(self.failures) - 20} more")
        return "\n".join(lines)
