"""Pass/fail reports with first witnesses."""

from dataclasses import dataclass, field

from ._tensor import first_nonzero
from .exactla import rational_str


@dataclass(frozen=True)
class AxiomEntry:
    label: str
    passed: bool
    witness: tuple = None  # basis-index tuple
    defect: tuple = None  # nonzero defect vector at the witness

    def to_dict(self):
        d = {"label": self.label, "pass": self.passed}
        if not self.passed:
            d["witness"] = list(self.witness)
            d["defect"] = [rational_str(v) for v in self.defect]
        return d


@dataclass
class AxiomReport:
    entries: list = field(default_factory=list)

    @property
    def passed(self):
        return all(e.passed for e in self.entries)

    def __bool__(self):
        return self.passed

    def entry(self, label):
        for e in self.entries:
            if e.label == label:
                return e
        raise KeyError(label)

    def failed(self):
        return [e.label for e in self.entries if not e.passed]

    def labels(self):
        return [e.label for e in self.entries]

    def add(self, entry):
        self.entries.append(entry)

    def extend(self, other, prefix=""):
        for e in other.entries:
            self.entries.append(AxiomEntry(prefix + e.label, e.passed, e.witness, e.defect))

    def to_dict(self):
        return {"pass": self.passed, "checks": [e.to_dict() for e in self.entries]}

    def __repr__(self):
        return "AxiomReport(%s)" % ", ".join(
            "%s=%s" % (e.label, "ok" if e.passed else "FAIL") for e in self.entries)


def check_zero(label, defect):
    """Entry for a defect tensor indexed (args..., output).

    The witness is the argument tuple of the first nonzero entry and the
    defect is the whole output vector there.
    """
    idx = first_nonzero(defect)
    if idx is None:
        return AxiomEntry(label, True)
    args = idx[:-1]
    vec = tuple(defect[args]) if defect.ndim > 1 else (defect[idx],)
    return AxiomEntry(label, False, args, vec)


def check_zero_operator(label, defect):
    """Entry for a defect of operators indexed (args..., row, col).

    The witness is (args..., col) and the defect is that column.
    """
    idx = first_nonzero(defect)
    if idx is None:
        return AxiomEntry(label, True)
    args, col = idx[:-2], idx[-1]
    vec = tuple(defect[args][:, col])
    return AxiomEntry(label, False, args + (col,), vec)
