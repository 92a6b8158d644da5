"""Configuration loading: a JSON object model describing the group, the
involution, the K-side data, dimensions, optional torus tables, and an
optional affine cone model. Validation failures name the offending field."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .ktheta import Dims, RealFormConfig
from .langlands import PositiveSystem, TorusDatum
from .oracle import AffineConeModel, ConeVariable
from .rootdata import (
    InvolutionData,
    RootDatum,
    build_root_datum,
    reductive_root_datum,
)


class ConfigError(ValueError):
    """A malformed or inconsistent configuration document."""


@dataclass(frozen=True)
class LoadedConfig:
    label: str
    real_form: RealFormConfig
    tori: tuple[TorusDatum, ...] | None
    oracle_model: AffineConeModel | None


def _get(obj, key, path, required=True, default=None):
    if not isinstance(obj, dict):
        raise ConfigError(f"{path}: expected an object")
    if key not in obj:
        if required:
            raise ConfigError(f"{path}.{key}: missing")
        return default
    return obj[key]


def _int_matrix(value, path):
    if not isinstance(value, list) or not all(isinstance(r, list) for r in value):
        raise ConfigError(f"{path}: expected a matrix (list of integer lists)")
    try:
        return tuple(tuple(int(v) for v in row) for row in value)
    except (TypeError, ValueError):
        raise ConfigError(f"{path}: matrix entries must be integers") from None


def _weight_list(value, path):
    if not isinstance(value, list):
        raise ConfigError(f"{path}: expected a list of integer vectors")
    try:
        return tuple(tuple(int(v) for v in w) for w in value)
    except (TypeError, ValueError):
        raise ConfigError(f"{path}: weights must be integer vectors") from None


def _load_group(obj, path) -> RootDatum:
    try:
        if "cartan_matrix" in obj:
            return build_root_datum(_int_matrix(obj["cartan_matrix"], f"{path}.cartan_matrix"))
        rank = int(_get(obj, "rank", path))
        roots = _weight_list(_get(obj, "simple_roots", path), f"{path}.simple_roots")
        coroots = _weight_list(_get(obj, "simple_coroots", path), f"{path}.simple_coroots")
        return reductive_root_datum(rank, roots, coroots)
    except ConfigError:
        raise
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _load_involution(obj, path) -> InvolutionData:
    matrix = _int_matrix(_get(obj, "matrix", path), f"{path}.matrix")
    compact = _weight_list(_get(obj, "compact_roots", path, required=False, default=[]), f"{path}.compact_roots")
    try:
        return InvolutionData(matrix, compact)
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def _load_tori(value, path) -> tuple[TorusDatum, ...]:
    if not isinstance(value, list):
        raise ConfigError(f"{path}: expected a list of torus tables")
    out = []
    for i, entry in enumerate(value):
        tpath = f"{path}[{i}]"
        label = str(_get(entry, "label", tpath))
        theta = _load_involution(
            {"matrix": _get(entry, "theta", tpath), "compact_roots": entry.get("compact_roots", [])},
            tpath,
        )
        systems = []
        raw_systems = _get(entry, "positive_systems", tpath)
        if not isinstance(raw_systems, list) or not raw_systems:
            raise ConfigError(f"{tpath}.positive_systems: expected a non-empty list")
        for j, ps in enumerate(raw_systems):
            spath = f"{tpath}.positive_systems[{j}]"
            systems.append(
                PositiveSystem(
                    id=str(_get(ps, "id", spath)),
                    imaginary_roots=_weight_list(
                        _get(ps, "imaginary_roots", spath, required=False, default=[]),
                        f"{spath}.imaginary_roots",
                    ),
                    ell=int(_get(ps, "ell", spath)),
                )
            )
        out.append(TorusDatum(label, theta, tuple(systems)))
    return tuple(out)


def _load_model(obj, path) -> AffineConeModel:
    raw_vars = _get(obj, "variables", path)
    if not isinstance(raw_vars, list) or not raw_vars:
        raise ConfigError(f"{path}.variables: expected a non-empty list")
    variables = []
    for i, v in enumerate(raw_vars):
        vpath = f"{path}.variables[{i}]"
        name = str(_get(v, "name", vpath))
        weight = tuple(int(x) for x in _get(v, "weight", vpath))
        variables.append(ConeVariable(name, weight))
    raw_gens = _get(obj, "generators", path)
    if not isinstance(raw_gens, list):
        raise ConfigError(f"{path}.generators: expected a list")
    generators = []
    for i, g in enumerate(raw_gens):
        gpath = f"{path}.generators[{i}]"
        if not isinstance(g, list) or not g:
            raise ConfigError(f"{gpath}: expected a non-empty list of terms")
        terms = {}
        for j, term in enumerate(g):
            tpath = f"{gpath}[{j}]"
            num = int(_get(term, "num", tpath))
            den = int(_get(term, "den", tpath, required=False, default=1))
            if den == 0:
                raise ConfigError(f"{tpath}.den: zero denominator")
            exps = tuple(int(x) for x in _get(term, "exponents", tpath))
            terms[exps] = terms.get(exps, Fraction(0)) + Fraction(num, den)
        generators.append(terms)
    try:
        return AffineConeModel(tuple(variables), tuple(generators))
    except ValueError as exc:
        raise ConfigError(f"{path}: {exc}") from None


def config_from_dict(doc: dict, label: str | None = None) -> LoadedConfig:
    """Build and cross-validate a configuration from its object model."""
    if not isinstance(doc, dict):
        raise ConfigError("top level: expected an object")
    name = label or str(doc.get("label", "unnamed"))
    g_datum = _load_group(_get(doc, "group", "group"), "group")
    involution = _load_involution(_get(doc, "involution", "involution"), "involution")

    kobj = _get(doc, "k", "k")
    torus_rank = int(_get(kobj, "torus_rank", "k"))
    restriction = _int_matrix(_get(kobj, "restriction", "k"), "k.restriction")
    k_weights = _weight_list(_get(kobj, "weights", "k"), "k.weights")
    k_datum = None
    if kobj.get("datum") is not None:
        k_datum = _load_group(kobj["datum"], "k.datum")

    dobj = _get(doc, "dims", "dims")
    dims = Dims(
        dim_g=int(_get(dobj, "g", "dims")),
        dim_k=int(_get(dobj, "k", "dims")),
        dim_p=int(_get(dobj, "p", "dims")),
        rank_split=int(_get(dobj, "rank_split", "dims")),
    )
    split = bool(_get(doc, "split_mod_center", "split_mod_center"))

    try:
        real_form = RealFormConfig(
            label=name,
            g_datum=g_datum,
            involution=involution,
            k_torus_rank=torus_rank,
            restriction=restriction,
            k_weights=k_weights,
            dims=dims,
            split_mod_center=split,
            k_datum=k_datum,
        )
    except ValueError as exc:
        raise ConfigError(f"config {name!r}: {exc}") from None

    tori = None
    if doc.get("tori") is not None:
        tori = _load_tori(doc["tori"], "tori")
        for torus in tori:
            try:
                torus.validate(g_datum)
            except ValueError as exc:
                raise ConfigError(f"tori[{torus.label!r}]: {exc}") from None

    model = None
    if doc.get("oracle_model") is not None:
        model = _load_model(doc["oracle_model"], "oracle_model")
        if model.torus_rank != torus_rank:
            raise ConfigError(
                f"oracle_model: torus rank {model.torus_rank} does not match k.torus_rank {torus_rank}"
            )

    return LoadedConfig(name, real_form, tori, model)


def load_config_file(path: str) -> LoadedConfig:
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config file {path} is not valid JSON: {exc}") from None
    return config_from_dict(doc)
