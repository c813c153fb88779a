from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Tuple

from .errors import UnknownVariable
from .exterior import Form, log_differential
from .scalar import Poly


@dataclass(frozen=True)
class VarContext:
    """Ordered variable names plus the indices of the log variables."""

    names: Tuple[str, ...]
    logvars: FrozenSet[int] = field(default_factory=frozenset)

    @classmethod
    def of(cls, names, logvars=()) -> "VarContext":
        names = tuple(names)
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names")
        idx = []
        for v in logvars:
            if v not in names:
                raise UnknownVariable(f"log variable {v!r} is not declared")
            idx.append(names.index(v))
        return cls(names, frozenset(idx))

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise UnknownVariable(f"unknown variable {name!r}") from None

    def var(self, name: str) -> Poly:
        return Poly.var(self.index(name))

    def d(self, name: str) -> Form:
        return Form.differential(self.index(name))

    def dlog(self, name: str) -> Form:
        return log_differential(self.index(name))

    def __len__(self) -> int:
        return len(self.names)
