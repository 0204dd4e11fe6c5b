"""Command-line front end and the symmpow-v1 JSON contract.

Input document (schema "symmpow-v1"):

    {
      "schema": "symmpow-v1",
      "field": {"p": 7, "f": 1},
      "generators": [[[0, 1], [1, 0]], [[0, 6], [1, 6]]],
      "modules": [{"label": "sign", "images": [[[6]], [[1]]]}],
      "options": {"m_max": 6, "seed": 0}
    }

Field elements are plain integers when f = 1 and coefficient lists of
length f (constant term first) otherwise.  Matrices are row-major nested
arrays.  Reports are emitted as JSON with sorted keys and fixed
indentation, so identical inputs produce byte-identical files.

Exit codes: 0 success; 1 a module failed certification (e.g. reducible);
2 malformed input; 3 enumeration or dimension cap exceeded; 4 generator
images do not define a homomorphism; 5 irreducibility test inconclusive;
6 a verified-by-construction identity failed, which means a bug, not bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field as dc_field

from .construct import Certificate
from .errors import (CapExceeded, MeataxeInconclusive, NotARepresentation,
                     ParseError, TheoremViolation)
from .fields import FieldSpec, make_field
from .groups import (DEFAULT_GROUP_CAP, GroupData, center_scalars,
                     coset_transversal, enumerate_group)
from .linalg import Mat
from .meataxe import is_irreducible
from .reps import defining_rep, paired_rep
from .scan import (DEFAULT_DIM_CAP, OccurrenceTable, TheoremReport,
                   VerifyOptions, molien_table, occurrence_scan,
                   verify_theorem)

SCHEMA = "symmpow-v1"

_OPTION_KEYS = {"m_max", "k_max", "seed", "cap_group", "cap_dim", "molien",
                "jobs"}


@dataclass
class ModuleSpec:
    label: str
    images: list


@dataclass
class ProblemDoc:
    field: FieldSpec
    generators: list
    modules: list
    options: dict = dc_field(default_factory=dict)


# ---------------------------------------------------------------------------
# decoding

def _fail(msg: str):
    raise ParseError(msg)


def decode_element(field: FieldSpec, obj, where: str) -> int:
    if field.f == 1:
        if not isinstance(obj, int) or isinstance(obj, bool):
            _fail(f"{where}: expected an integer field element")
        if not 0 <= obj < field.q:
            _fail(f"{where}: element {obj} out of range for GF({field.q})")
        return obj
    if not isinstance(obj, list) or len(obj) != field.f:
        _fail(f"{where}: expected a coefficient list of length {field.f}")
    code = 0
    for t, c in enumerate(reversed(obj)):
        if not isinstance(c, int) or isinstance(c, bool) or not 0 <= c < field.p:
            _fail(f"{where}: coefficient {c!r} out of range for GF({field.p})")
        code = code * field.p + c
    return code


def decode_matrix(field: FieldSpec, obj, where: str) -> Mat:
    if not isinstance(obj, list) or not obj:
        _fail(f"{where}: expected a nonempty matrix")
    n = len(obj)
    rows = []
    for i, row in enumerate(obj):
        if not isinstance(row, list) or len(row) != n:
            _fail(f"{where}: matrix must be square (row {i})")
        rows.append([decode_element(field, x, f"{where}[{i}][{j}]")
                     for j, x in enumerate(row)])
    return Mat(field, rows)


def parse_problem(obj) -> ProblemDoc:
    if not isinstance(obj, dict):
        _fail("document must be a JSON object")
    if obj.get("schema") != SCHEMA:
        _fail(f'missing or unsupported "schema" (expected "{SCHEMA}")')
    fobj = obj.get("field")
    if not isinstance(fobj, dict) or "p" not in fobj:
        _fail('"field" must be an object with at least "p"')
    try:
        field = make_field(fobj["p"], fobj.get("f", 1),
                           tuple(fobj["modulus"]) if "modulus" in fobj else None)
    except (ValueError, TypeError) as exc:
        _fail(f"invalid field: {exc}")
    gens_obj = obj.get("generators")
    if not isinstance(gens_obj, list) or not gens_obj:
        _fail('"generators" must be a nonempty list of matrices')
    generators = [decode_matrix(field, g, f"generators[{i}]")
                  for i, g in enumerate(gens_obj)]
    dim = generators[0].nrows
    for i, g in enumerate(generators):
        if g.nrows != dim:
            _fail(f"generators[{i}]: size differs from generators[0]")
    modules = []
    for i, mobj in enumerate(obj.get("modules", [])):
        if not isinstance(mobj, dict):
            _fail(f"modules[{i}] must be an object")
        label = mobj.get("label", f"W{i}")
        if not isinstance(label, str):
            _fail(f"modules[{i}]: label must be a string")
        imgs_obj = mobj.get("images")
        if not isinstance(imgs_obj, list) or len(imgs_obj) != len(generators):
            _fail(f"modules[{i}]: need exactly {len(generators)} images")
        images = [decode_matrix(field, m, f"modules[{i}].images[{s}]")
                  for s, m in enumerate(imgs_obj)]
        d = images[0].nrows
        for s, m in enumerate(images):
            if m.nrows != d:
                _fail(f"modules[{i}].images[{s}]: size differs from the first")
        modules.append(ModuleSpec(label=label, images=images))
    options = obj.get("options", {})
    if not isinstance(options, dict):
        _fail('"options" must be an object')
    unknown = set(options) - _OPTION_KEYS
    if unknown:
        _fail(f"unknown options: {sorted(unknown)}")
    return ProblemDoc(field=field, generators=generators, modules=modules,
                      options=dict(options))


# ---------------------------------------------------------------------------
# encoding

def enc_element(field: FieldSpec, code: int):
    if field.f == 1:
        return code
    return list(field.coeffs(code))


def enc_vector(field: FieldSpec, vec):
    return [enc_element(field, x) for x in vec]


def enc_matrix(m: Mat):
    return [enc_vector(m.field, row) for row in m.rows]


def enc_field(field: FieldSpec):
    out = {"p": field.p, "f": field.f}
    if field.f > 1:
        out["modulus"] = list(field.modulus)
    return out


def enc_poly(p):
    return enc_vector(p.field, p.coeffs)


def enc_certificate(cert: Certificate):
    return {
        "field": enc_field(cert.field),
        "extension_degree": cert.extension_degree,
        "generic_vector": enc_vector(cert.field, cert.generic_vector),
        "char_exponent": cert.char_exponent,
        "complement_exponent": cert.complement_exponent,
        "coset_count": cert.coset_count,
        "center_order": cert.center_order,
        "group_order": cert.group_order,
        "degree": cert.degree,
        "shift": cert.shift,
        "total_degree": cert.total_degree,
        "coset_products": [enc_poly(f) for f in cert.coset_products],
        "transversal_product": enc_poly(cert.transversal_product),
        "orbit_product": enc_poly(cert.orbit_product),
        "span_polys": [enc_poly(f) for f in cert.span_polys],
        "embedding_witness": enc_matrix(cert.embedding_witness),
        "quotient_witness": enc_matrix(cert.quotient_witness),
        "central": cert.central,
        "flags": dict(cert.flags),
    }


def enc_table(table: OccurrenceTable):
    return {
        "rows": [list(r) for r in table.rows],
        "minimal_submodule_degree": table.minimal_sub_m,
        "minimal_quotient_degree": table.minimal_quot_m,
        "bound": table.bound,
        "molien": (list(table.molien_multiplicities)
                   if table.molien_multiplicities is not None else None),
    }


def enc_theorem_report(rep: TheoremReport):
    return {
        "irreducible_draws": rep.irreducible_draws,
        "splitting_degree": rep.splitting_degree,
        "submodule_claim": enc_certificate(rep.sub_claim),
        "quotient_claim": enc_certificate(rep.quot_claim),
        "base_submodule_ok": rep.base_submodule_ok,
        "base_quotient_ok": rep.base_quotient_ok,
        "scan": enc_table(rep.table),
        "scan_consistent": rep.scan_consistent,
        "molien_ok": rep.molien_ok,
        "periodicity": list(rep.periodicity),
        "ok": rep.ok,
    }


def _split_certificate_json(field: FieldSpec, cert: dict):
    out = dict(cert)
    for key in ("primal_vector", "dual_vector"):
        if key in out:
            out[key] = enc_vector(field, out[key])
    return out


# ---------------------------------------------------------------------------
# commands

def _build_group(doc: ProblemDoc) -> GroupData:
    cap = doc.options.get("cap_group", DEFAULT_GROUP_CAP)
    try:
        group = enumerate_group(doc.generators, cap=cap)
    except ValueError as exc:
        raise ParseError(f"invalid generators: {exc}")
    center_scalars(group)
    coset_transversal(group)
    return group


def _group_summary(group: GroupData):
    return {
        "order": group.order,
        "center_order": group.center_order,
        "coset_count": group.coset_count,
        "dim": group.dim,
        "generators": len(group.generators),
    }


def _module_reps(doc: ProblemDoc, group: GroupData):
    return [(spec.label, paired_rep(group, spec.images))
            for spec in doc.modules]


def cmd_check(doc: ProblemDoc):
    """Certify the inputs: group closure, homomorphism property,
    irreducibility of each module."""
    group = _build_group(doc)
    seed = doc.options.get("seed", 0)
    modules = []
    all_ok = True
    for label, rep in _module_reps(doc, group):
        res = is_irreducible(rep, seed)
        ok = res.irreducible
        all_ok = all_ok and ok
        modules.append({
            "label": label,
            "dim": rep.dim,
            "verdict": res.verdict,
            "draws": res.draws,
            "certificate": _split_certificate_json(doc.field, res.certificate),
        })
    report = {
        "schema": SCHEMA,
        "kind": "check-report",
        "field": enc_field(doc.field),
        "group": _group_summary(group),
        "modules": modules,
        "ok": all_ok,
    }
    return report, 0 if all_ok else 1


def cmd_scan(doc: ProblemDoc):
    """Occurrence tables for every module, with the character oracle as a
    cross-check when the characteristic permits."""
    group = _build_group(doc)
    v = defining_rep(group)
    m_max = doc.options.get("m_max", group.order)
    cap_dim = doc.options.get("cap_dim", DEFAULT_DIM_CAP)
    jobs = doc.options.get("jobs", 1)
    molien_mode = doc.options.get("molien", "auto")
    coprime = group.order % doc.field.p != 0
    if molien_mode == "on" and not coprime:
        raise ParseError("character oracle requested but the characteristic "
                         "divides the group order")
    use_molien = molien_mode == "on" or (molien_mode == "auto" and coprime)
    modules = []
    all_ok = True
    for label, rep in _module_reps(doc, group):
        table = occurrence_scan(v, rep, m_max=m_max, cap_dim=cap_dim,
                                jobs=jobs, label=label)
        if use_molien:
            mt = molien_table(v, rep, m_max)
            table.molien_multiplicities = mt[1:]
            if any(s != mt[m] or qd != mt[m] for m, s, qd in table.rows):
                raise TheoremViolation(
                    f"module {label}: scan and character oracle disagree")
        found_sub = table.minimal_sub_m is not None
        found_quot = table.minimal_quot_m is not None
        if m_max >= group.order and not (found_sub and found_quot):
            raise TheoremViolation(
                f"module {label}: no occurrence up to the bound {group.order}")
        ok = ((not found_sub or table.minimal_sub_m <= group.order)
              and (not found_quot or table.minimal_quot_m <= group.order))
        all_ok = all_ok and ok
        entry = {"label": label, "dim": rep.dim, "ok": ok}
        entry.update(enc_table(table))
        modules.append(entry)
    report = {
        "schema": SCHEMA,
        "kind": "scan-report",
        "field": enc_field(doc.field),
        "group": _group_summary(group),
        "m_max": m_max,
        "modules": modules,
        "ok": all_ok,
    }
    return report, 0 if all_ok else 1


def cmd_construct(doc: ProblemDoc):
    """Full verification per module, certificates serialized in full."""
    group = _build_group(doc)
    v = defining_rep(group)
    opts = VerifyOptions(
        k_max=doc.options.get("k_max", 1),
        seed=doc.options.get("seed", 0),
        m_max=doc.options.get("m_max"),
        cap_dim=doc.options.get("cap_dim", DEFAULT_DIM_CAP),
        molien=doc.options.get("molien", "auto"),
        jobs=doc.options.get("jobs", 1),
    )
    modules = []
    all_ok = True
    any_reducible = False
    for label, rep in _module_reps(doc, group):
        res = is_irreducible(rep, opts.seed)
        if not res.irreducible:
            any_reducible = True
            all_ok = False
            modules.append({"label": label, "dim": rep.dim, "report": None})
            continue
        tr = verify_theorem(v, rep, opts, label=label)
        all_ok = all_ok and tr.ok
        modules.append({
            "label": label,
            "dim": rep.dim,
            "report": enc_theorem_report(tr),
        })
    report = {
        "schema": SCHEMA,
        "kind": "construct-report",
        "field": enc_field(doc.field),
        "group": _group_summary(group),
        "modules": modules,
        "ok": all_ok,
    }
    # reducible input is a certification failure, not a broken identity
    return report, 0 if all_ok else (1 if any_reducible else 6)


# ---------------------------------------------------------------------------
# human-readable summaries

def _print_check(report):
    g = report["group"]
    print(f"group: order {g['order']}, scalar center {g['center_order']}, "
          f"cosets {g['coset_count']}")
    for m in report["modules"]:
        print(f"  {m['label']}: dim {m['dim']}, {m['verdict']} "
              f"({m['draws']} draws)")
    print("ok" if report["ok"] else "FAILED")


def _print_scan(report):
    g = report["group"]
    print(f"group: order {g['order']}, scan to m = {report['m_max']}")
    for m in report["modules"]:
        print(f"  {m['label']} (dim {m['dim']}): minimal submodule degree "
              f"{m['minimal_submodule_degree']}, minimal quotient degree "
              f"{m['minimal_quotient_degree']}, bound {m['bound']}")
        sub_row = " ".join(str(r[1]) for r in m["rows"])
        quot_row = " ".join(str(r[2]) for r in m["rows"])
        print(f"    sub:  {sub_row}")
        print(f"    quot: {quot_row}")
        if m["molien"] is not None:
            print(f"    char: {' '.join(str(x) for x in m['molien'])}")
    print("ok" if report["ok"] else "FAILED")


def _print_construct(report):
    g = report["group"]
    print(f"group: order {g['order']}, scalar center {g['center_order']}, "
          f"cosets {g['coset_count']}")
    for m in report["modules"]:
        r = m["report"]
        if r is None:
            print(f"  {m['label']} (dim {m['dim']}): REDUCIBLE, skipped")
            continue
        sub = r["submodule_claim"]
        quot = r["quotient_claim"]
        print(f"  {m['label']} (dim {m['dim']}): splitting degree "
              f"{r['splitting_degree']}, submodule degree {sub['degree']}, "
              f"quotient degree {quot['degree']}, "
              f"shifts verified {len(r['periodicity'])}")
        print(f"    base-field witnesses: submodule "
              f"{'yes' if r['base_submodule_ok'] else 'NO'}, quotient "
              f"{'yes' if r['base_quotient_ok'] else 'NO'}; scan consistent: "
              f"{'yes' if r['scan_consistent'] else 'NO'}")
    print("ok" if report["ok"] else "FAILED")


_PRINTERS = {"check-report": _print_check, "scan-report": _print_scan,
             "construct-report": _print_construct}


# ---------------------------------------------------------------------------
# entry point

def _add_common(p: argparse.ArgumentParser):
    p.add_argument("--input", required=True, help="problem document (JSON)")
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--m-max", type=int, dest="m_max")
    p.add_argument("--k-max", type=int, dest="k_max")
    p.add_argument("--seed", type=int)
    p.add_argument("--cap-group", type=int, dest="cap_group")
    p.add_argument("--cap-dim", type=int, dest="cap_dim")
    p.add_argument("--molien", choices=("auto", "on", "off"))
    p.add_argument("--jobs", type=int)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symmpow",
        description="locate irreducible modules inside symmetric powers "
                    "of a faithful finite matrix group action")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (("check", cmd_check), ("scan", cmd_scan),
                     ("construct", cmd_construct)):
        p = sub.add_parser(name, help=fn.__doc__)
        _add_common(p)
        p.set_defaults(fn=fn)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        with open(args.input, "r", encoding="utf-8") as fh:
            try:
                obj = json.load(fh)
            except json.JSONDecodeError as exc:
                raise ParseError(f"invalid JSON: {exc}")
        doc = parse_problem(obj)
        for key in _OPTION_KEYS:
            val = getattr(args, key, None)
            if val is not None:
                doc.options[key] = val
        report, code = args.fn(doc)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except NotARepresentation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except MeataxeInconclusive as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 6
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(json.dumps(report, sort_keys=True, indent=2) + "\n")
    _PRINTERS[report["kind"]](report)
    return code


if __name__ == "__main__":
    raise SystemExit(main())
