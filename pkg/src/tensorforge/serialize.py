"""JSON (de)serialization for groups, homs, actions and reports.

One resolver handles every group-valued input: a string that parses as a
catalog key yields the catalog group, anything else is treated as a path
to a group file.  Files are never trusted; loaded tables go through full
validation.
"""

from __future__ import annotations

import json

import numpy as np

from .automorphisms import automorphism_group
from .catalog import make_catalog_group
from .errors import IoError, UnknownCatalogKey
from .groups import FiniteGroup, GroupHom, from_cayley_table
from .presentations import Presentation


def group_to_dict(G):
    return {"order": G.order,
            "table": G.table.tolist(),
            "names": list(G.names)}


def group_from_dict(data):
    try:
        table = data["table"]
        names = data.get("names")
        order = data["order"]
    except (KeyError, TypeError) as exc:
        raise IoError(f"malformed group file: missing {exc}") from None
    if len(table) != order:
        raise IoError(f"order field {order} does not match table size "
                      f"{len(table)}")
    return from_cayley_table(table, names=names)


def resolve_group(spec):
    """Catalog key, path to a group JSON file, or a FiniteGroup as-is."""
    if isinstance(spec, FiniteGroup):
        return spec
    try:
        return make_catalog_group(spec)
    except UnknownCatalogKey:
        pass
    try:
        with open(spec, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise IoError(f"{spec!r} is neither a catalog key nor a readable "
                      f"file ({exc})") from None
    except json.JSONDecodeError as exc:
        raise IoError(f"{spec}: invalid JSON ({exc})") from None
    return group_from_dict(data)


def hom_from_dict(data):
    try:
        source = resolve_group(data["source"])
        target = resolve_group(data["target"])
        mapping = data["map"]
    except (KeyError, TypeError) as exc:
        raise IoError(f"malformed hom file: missing {exc}") from None
    return GroupHom(source, target, mapping, validate=True)


def hom_to_dict(hom, source_key, target_key):
    return {"source": source_key, "target": target_key,
            "map": [int(v) for v in hom.map]}


def presentation_to_dict(presentation):
    return {"ngens": presentation.ngens,
            "relators": [list(r) for r in presentation.relators]}


def presentation_from_dict(data):
    try:
        return Presentation(int(data["ngens"]),
                            tuple(tuple(w) for w in data["relators"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise IoError(f"malformed presentation file: {exc}") from None


def aut_group_to_dict(aut, base_key):
    return {"base": base_key,
            "order": aut.order,
            "maps": aut.elements.tolist(),
            "inner": list(aut.inner_indices)}


def action_pair_to_dict(pair, g_key, h_key):
    """Maps index into the lexicographically ordered AutGroup elements."""
    autG = automorphism_group(pair.G)
    autH = automorphism_group(pair.H)
    alpha = [autG.index_of(row) for row in pair.alpha_maps]
    beta = [autH.index_of(row) for row in pair.beta_maps]
    return {"g": g_key, "h": h_key,
            "alpha": {"map": alpha}, "beta": {"map": beta}}


def action_pair_from_dict(data):
    from .actions import ActionPair
    try:
        G = resolve_group(data["g"])
        H = resolve_group(data["h"])
        alpha_idx = data["alpha"]["map"]
        beta_idx = data["beta"]["map"]
    except (KeyError, TypeError) as exc:
        raise IoError(f"malformed action pair file: missing {exc}") from None
    autG = automorphism_group(G)
    autH = automorphism_group(H)
    if len(alpha_idx) != H.order or len(beta_idx) != G.order:
        raise IoError("alpha map must have |H| entries and beta map |G|")
    for i in alpha_idx:
        if not 0 <= int(i) < autG.order:
            raise IoError(f"alpha index {i} out of range for Aut(G)")
    for i in beta_idx:
        if not 0 <= int(i) < autH.order:
            raise IoError(f"beta index {i} out of range for Aut(H)")
    alpha = np.array([autG.elements[int(i)] for i in alpha_idx])
    beta = np.array([autH.elements[int(i)] for i in beta_idx])
    return ActionPair(G, H, alpha, beta)


def tensor_report_to_dict(report):
    symbols = {f"{g},{h}": int(v) for (g, h), v in
               sorted(report.symbol_map.items())}
    return {"order": report.order,
            "abelian": bool(report.tensor.is_abelian),
            "invariants": report.invariants,
            "derivative_order": report.derivative.order,
            "kernel_order": report.kernel.order if report.kernel else None,
            "kappa": ([int(v) for v in report.kappa.map]
                      if report.kappa else None),
            "symbols": symbols}


def witness_to_dict(witness):
    if witness is None:
        return None
    return {"equation": witness.equation, "g": witness.g, "g1": witness.g1,
            "h": witness.h, "h1": witness.h1,
            "lhs": witness.lhs, "rhs": witness.rhs}


def evidence_lines(records):
    """JSON lines, one per record, stable key order."""
    return "\n".join(json.dumps(r, sort_keys=False) for r in records)


def coset_table_to_csv(table):
    header = ["coset"]
    for k in range(1, table.ngens + 1):
        header += [f"g{k}", f"g{k}^-1"]
    lines = [",".join(header)]
    for c in range(table.ncosets):
        lines.append(",".join([str(c)] + [str(int(v))
                                          for v in table.rows[c]]))
    return "\n".join(lines)
