"""Preset nilmanifolds: the torus, the Iwasawa manifold and some of its deformations."""

import sys
from dataclasses import dataclass
from importlib import resources

if sys.version_info >= (3, 11):
    import tomllib
else:
    import tomli as tomllib

from .errors import CatalogError, UnclassifiableError
from .invariant_forms import StructureEquations, build
from .linalg import Mat, rank
from .scalar import ZERO, Scalar, format_scalar

SIGMA_KEYS = ("s12", "s11b", "s12b", "s21b", "s22b")
LABELS = ("i", "ii.a", "ii.b", "iii.a", "iii.b")


@dataclass(frozen=True)
class SigmaSet:
    s12: Scalar = ZERO
    s11b: Scalar = ZERO
    s12b: Scalar = ZERO
    s21b: Scalar = ZERO
    s22b: Scalar = ZERO

    def __post_init__(self):
        for k in SIGMA_KEYS:
            object.__setattr__(self, k, Scalar.coerce(getattr(self, k)))

    @classmethod
    def from_mapping(cls, data):
        unknown = set(data) - set(SIGMA_KEYS)
        if unknown:
            raise CatalogError(f"unknown structure constants {sorted(unknown)}")
        return cls(**{k: Scalar.coerce(v) for k, v in data.items()})

    def to_mapping(self):
        return {k: format_scalar(getattr(self, k)) for k in SIGMA_KEYS if getattr(self, k)}

    def scaled(self, c):
        c = Scalar.coerce(c)
        return SigmaSet(*(c * getattr(self, k) for k in SIGMA_KEYS))

    def barred_vanish(self):
        return not any(getattr(self, k) for k in SIGMA_KEYS[1:])

    def equations(self):
        """n = 3 equations with d(phi1) = d(phi2) = 0."""
        mix = {(3, 1, 1): self.s11b, (3, 1, 2): self.s12b, (3, 2, 1): self.s21b, (3, 2, 2): self.s22b}
        return StructureEquations(3, {(3, 1, 2): self.s12}, mix)


@dataclass(frozen=True)
class ClassLabel:
    label: str
    rank_s: int

    def __str__(self):
        return f"({self.label})"


def s_matrix(sigma):
    """The 2 x 4 matrix of barred constants: conjugated first row, swapped tail in the second."""
    s = sigma
    row1 = [x.conjugate() for x in (s.s11b, s.s22b, s.s12b, s.s21b)]
    row2 = [s.s11b, s.s22b, s.s21b, s.s12b]
    return Mat.from_rows([row1, row2], 4)


def s_rank(sigma):
    return rank(s_matrix(sigma))


def classify(sigma, d_nonzero):
    """Deformation class from rank S and the caller's D(t) != 0 flag."""
    r = s_rank(sigma)
    if r == 0:
        if d_nonzero:
            raise UnclassifiableError("D(t) != 0 needs barred structure constants, but all of them vanish")
        return ClassLabel("i", 0)
    suffix = "a" if r == 1 else "b"
    return ClassLabel(("iii." if d_nonzero else "ii.") + suffix, r)


@dataclass(frozen=True)
class Preset:
    name: str
    sigma: SigmaSet
    label: ClassLabel
    d_nonzero: bool
    note: str
    expected: dict

    def equations(self):
        return self.sigma.equations()

    def complex(self):
        return build(self.equations())


def _read(path, default):
    if path is None:
        return tomllib.loads(resources.files("frolicher").joinpath("data").joinpath(default).read_text())
    with open(path, "rb") as fh:
        return tomllib.load(fh)


class Catalog:
    def __init__(self, presets_path=None, expected_path=None):
        try:
            raw = _read(presets_path, "presets.toml")
            exp = _read(expected_path, "expected.toml")
        except tomllib.TOMLDecodeError as e:
            raise CatalogError(f"malformed catalog: {e}") from e
        self.columns = [tuple(c) for c in exp.get("columns", [])]
        self.corners = {tuple(int(x) for x in k.split(",")): v for k, v in exp.get("corners", {}).items()}
        self.presets = {}
        for name, entry in raw.items():
            entry = dict(entry)
            label = entry.pop("class", None)
            d_nonzero = bool(entry.pop("d_nonzero", False))
            note = entry.pop("note", "")
            try:
                sigma = SigmaSet.from_mapping(entry)
            except ValueError as e:
                raise CatalogError(f"preset {name}: {e}") from e
            if label is not None:
                if label not in LABELS:
                    raise CatalogError(f"preset {name}: unknown class {label!r}")
                label = ClassLabel(label, {"i": 0, "ii.a": 1, "iii.a": 1}.get(label, 2))
            self.presets[name] = Preset(name, sigma, label, d_nonzero, note, exp.get(name, {}))

    def names(self):
        return sorted(self.presets)

    def __getitem__(self, name):
        try:
            return self.presets[name]
        except KeyError:
            raise CatalogError(f"unknown preset {name!r}; available: {', '.join(self.names())}") from None


_default = None


def default_catalog():
    global _default
    if _default is None:
        _default = Catalog()
    return _default


def preset(name):
    return default_catalog()[name]


def preset_names():
    return default_catalog().names()
