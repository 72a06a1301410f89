from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckReport:
    """Verdict of a property check.

    ``witness`` is present exactly when the property fails. ``roles`` names
    each witness component (``("x", "y")`` for a JNB2 failure, for example).
    ``certificate`` optionally carries positive evidence on success, such as
    the ordering that proves an atom set independent.
    """

    holds: bool
    witness: tuple | None = None
    roles: tuple[str, ...] = ()
    certificate: Any = None
    name: str = ""

    def __post_init__(self):
        if self.holds != (self.witness is None):
            raise ValueError("a failing report needs a witness and a passing one must not have one")
        if self.witness is not None and len(self.roles) != len(self.witness):
            raise ValueError("one role tag per witness component")

    @classmethod
    def ok(cls, name="", certificate=None):
        return cls(True, None, (), certificate, name)

    @classmethod
    def fail(cls, name, **witness):
        return cls(False, tuple(witness.values()), tuple(witness), None, name)

    @property
    def verdict(self) -> str:
        return "holds" if self.holds else "fails"

    def __bool__(self):
        return self.holds

    def as_dict(self) -> dict[str, Any]:
        return dict(zip(self.roles, self.witness)) if self.witness is not None else {}

    def describe(self, labels=None) -> str:
        text = f"{self.name or 'check'}: {self.verdict}"
        if self.witness is not None:
            parts = [f"{role}={_show(value, labels)}" for role, value in zip(self.roles, self.witness)]
            text += " at " + ", ".join(parts)
        return text

    def to_json(self, labels=None) -> dict[str, Any]:
        out: dict[str, Any] = {"name": self.name, "verdict": self.verdict}
        if self.witness is not None:
            out["witness"] = {role: _jsonable(v) for role, v in zip(self.roles, self.witness)}
            if labels is not None:
                out["witness_labels"] = {
                    role: _label(v, labels) for role, v in zip(self.roles, self.witness)
                }
        if self.certificate is not None:
            out["certificate"] = _jsonable(self.certificate)
        return out


def _jsonable(value):
    if isinstance(value, (tuple, list)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_json"):
        return value.to_json()
    return value


def _label(value, labels):
    if isinstance(value, (tuple, list)):
        return [_label(v, labels) for v in value]
    if isinstance(value, int) and 0 <= value < len(labels):
        return labels[value]
    return value


def _show(value, labels):
    if isinstance(value, (tuple, list)):
        return "(" + " ".join(_show(v, labels) for v in value) + ")"
    if labels is not None and isinstance(value, int) and 0 <= value < len(labels):
        if labels[value] != str(value):
            return f"{value}[{labels[value]}]"
    return str(value)
