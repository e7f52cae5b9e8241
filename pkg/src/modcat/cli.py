"""Command-line front end and file formats.

Subcommands mirror the library modules:

    ring validate|involutions|homs
    zmod validate|enumerate
    twocat validate|pi0|family
    pointed classes|braidings|squareclasses
    dy dims|diagnostic
    fusion2 real|ffield|pointed

All payloads are exact (integers, fraction strings, coefficient vectors) and
serialized with sorted keys, so identical invocations produce byte-identical
output.  Exit codes: 0 on success, 1 on a validation error (the message names
the violated axiom and its indices), 2 on a usage error.

File formats (JSON):

    ring     {"rank": r, "labels": [...], "unit": [...],
              "mult": [[[c_ijk ...] ...] ...], "involution": [...]?}
    module   {"ring": <ring object or file path>, "rank": r,
              "action": [per ring basis index, an r x r array]}
    skeleton {"simples": [...], "hom_nonzero": [[bool ...] ...],
              "hom_dims": [[int ...] ...]?, "max_end_dim": [...]?}
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

from . import basedring, dy, fusion2, pointed, skeleton, zmodule
from .errors import ModcatError, ValidationError
from .fieldprofile import profile_from_code
from .fields import field_from_code


@dataclass
class CommandResult:
    status: str                 # "ok" or "error"
    payload: dict
    human_table: str | None = None

    @property
    def exit_code(self) -> int:
        return 0 if self.status == "ok" else 1


def _load_json(path: str):
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _ring_from_obj(obj) -> basedring.BasedRingData:
    if isinstance(obj, str):
        obj = _load_json(obj)
    return basedring.BasedRingData.build(
        labels=obj.get("labels", [f"b{i}" for i in range(obj["rank"])]),
        mult=obj["mult"],
        unit_coeffs=obj["unit"],
        involution=obj.get("involution"))


def _skeleton_from_obj(obj) -> skeleton.TwoCatSkeleton:
    if isinstance(obj, str):
        obj = _load_json(obj)
    return skeleton.TwoCatSkeleton.build(
        simples=obj["simples"],
        hom_nonzero=obj["hom_nonzero"],
        hom_dims=obj.get("hom_dims"),
        max_end_dim=obj.get("max_end_dim"))


def _parse_group(text: str) -> pointed.FiniteAbelianGroup:
    orders = tuple(int(part) for part in text.split(","))
    return pointed.FiniteAbelianGroup(orders)


def _field_code(args) -> str:
    return args.field or getattr(args, "global_field", None) or "ac0"


def _markdown_table(headers, rows) -> str:
    lines = ["| " + " | ".join(headers) + " |",
             "| " + " | ".join("---" for _ in headers) + " |"]
    for row in rows:
        lines.append("| " + " | ".join(str(c) for c in row) + " |")
    return "\n".join(lines)


# -- command implementations -------------------------------------------------

def _cmd_ring_validate(args) -> CommandResult:
    data = _ring_from_obj(args.file)
    ring = basedring.validate_zplus_ring(data)
    certs = basedring.find_weak_based_involutions(ring)
    payload = {
        "valid": True,
        "rank": ring.rank,
        "labels": list(ring.labels),
        "weak_based": bool(certs),
    }
    if certs:
        cert = certs[0]
        payload["involution"] = list(cert.involution)
        payload["t_values"] = list(cert.t_values)
        payload["based"] = cert.based
        human = f"valid ring, weak based: yes, t={tuple(cert.t_values)}"
    else:
        human = "valid ring, weak based: no"
    return CommandResult("ok", payload, human)


def _cmd_ring_involutions(args) -> CommandResult:
    ring = basedring.validate_zplus_ring(_ring_from_obj(args.file))
    certs = basedring.find_weak_based_involutions(ring)
    payload = {"count": len(certs),
               "certificates": [{"involution": list(c.involution),
                                 "t_values": list(c.t_values),
                                 "based": c.based,
                                 "i0": sorted(c.i0_set)} for c in certs]}
    return CommandResult("ok", payload,
                         _markdown_table(["involution", "t_values", "based"],
                                         [(list(c.involution), list(c.t_values), c.based)
                                          for c in certs]))


def _cmd_ring_homs(args) -> CommandResult:
    src = basedring.validate_zplus_ring(_ring_from_obj(args.source))
    tgt = basedring.validate_zplus_ring(_ring_from_obj(args.target))
    homs = zmodule.enumerate_ring_homs(src, tgt, cap_scale=args.cap_scale)
    payload = {"count": len(homs),
               "homs": [{"matrix": [list(row) for row in h.matrix]} for h in homs]}
    return CommandResult("ok", payload,
                         _markdown_table(["#", "matrix"],
                                         [(i, [list(r) for r in h.matrix])
                                          for i, h in enumerate(homs)]))


def _cmd_zmod_validate(args) -> CommandResult:
    obj = _load_json(args.file)
    ring_ref = obj["ring"]
    if isinstance(ring_ref, str):
        # resolve a relative ring path against the module file's directory
        from pathlib import Path
        candidate = Path(args.file).parent / ring_ref
        base = Path(ring_ref)
        ring_ref = str(base if base.exists() else candidate)
    ring = basedring.validate_zplus_ring(_ring_from_obj(ring_ref))
    data = zmodule.ZPlusModuleData.build(ring, obj["action"])
    if data.rank != obj["rank"]:
        raise ValidationError(f"declared rank {obj['rank']} != action rank {data.rank}")
    module = zmodule.validate_module(data)
    payload = {"valid": True, "rank": module.rank,
               "irreducible": zmodule.is_irreducible(module),
               "indecomposable": zmodule.is_indecomposable(module)}
    return CommandResult("ok", payload,
                         f"valid module of rank {module.rank}; "
                         f"irreducible: {payload['irreducible']}, "
                         f"indecomposable: {payload['indecomposable']}")


def _cmd_zmod_enumerate(args) -> CommandResult:
    ring = basedring.validate_zplus_ring(_ring_from_obj(args.file))
    modules = zmodule.enumerate_irreducible_modules(ring, cap_scale=args.cap_scale)
    if args.indecomposable:
        modules = [m for m in modules if zmodule.is_indecomposable(m)]
    payload = {"count": len(modules),
               "modules": [{"rank": m.rank,
                            "action": [[list(row) for row in mat] for mat in m.action]}
                           for m in modules]}
    return CommandResult("ok", payload,
                         _markdown_table(["#", "rank"],
                                         [(i, m.rank) for i, m in enumerate(modules)]))


def _cmd_twocat_validate(args) -> CommandResult:
    validated = skeleton.validate_skeleton(_skeleton_from_obj(args.file))
    return CommandResult("ok", {"valid": True, "num_simples": validated.size},
                         f"valid skeleton with {validated.size} simples")


def _cmd_twocat_pi0(args) -> CommandResult:
    validated = skeleton.validate_skeleton(_skeleton_from_obj(args.file))
    components = skeleton.pi0(validated)
    report = skeleton.compactness_report(validated)
    payload = {"components": components,
               "num_components": report.num_components,
               "num_simples": report.num_simples,
               "is_connected": report.is_connected}
    return CommandResult("ok", payload,
                         _markdown_table(["component", "simples"],
                                         [(i, [validated.simples[j] for j in comp])
                                          for i, comp in enumerate(components)]))


def _cmd_twocat_family(args) -> CommandResult:
    validated = skeleton.truncated_family_2vect_fp(args.p, args.depth)
    report = skeleton.compactness_report(validated)
    payload = {"simples": list(validated.simples),
               "hom_dims": [list(r) for r in validated.data.hom_dims],
               "max_end_dim": list(validated.data.max_end_dim),
               "num_components": report.num_components,
               "num_simples": report.num_simples,
               "is_connected": report.is_connected,
               "depth": args.depth}
    return CommandResult("ok", payload,
                         f"depth {args.depth}: {report.num_simples} simples, "
                         f"{report.num_components} component(s)")


def _cmd_pointed_classes(args) -> CommandResult:
    group = _parse_group(args.group)
    profile = profile_from_code(_field_code(args))
    classes = pointed.module_classes(group, profile)
    rows = [(c.label, str(c.subgroup), c.subgroup.order, c.cocycle_class_index, c.separable)
            for c in classes]
    payload = {"count": len(classes),
               "separable_count": sum(1 for c in classes if c.separable),
               "classes": [{"label": c.label,
                            "subgroup_order": c.subgroup.order,
                            "subgroup_invariants": list(c.subgroup.invariant_factors),
                            "cocycle_class_index": c.cocycle_class_index,
                            "separable": c.separable} for c in classes]}
    return CommandResult("ok", payload,
                         _markdown_table(["label", "subgroup", "order", "class", "separable"],
                                         rows))


def _cmd_pointed_braidings(args) -> CommandResult:
    profile = profile_from_code(_field_code(args))
    braidings = pointed.braidings_on_cyclic(args.p, profile)
    payload = {"count": len(braidings),
               "zeta_exponents": [b.zeta_exponent for b in braidings]}
    return CommandResult("ok", payload,
                         f"{len(braidings)} braiding(s): zeta exponents "
                         f"{[b.zeta_exponent for b in braidings]}")


def _cmd_pointed_squareclasses(args) -> CommandResult:
    witnesses = pointed.square_class_witnesses(args.bound)
    payload = {"bound": args.bound, "count": len(witnesses), "witnesses": witnesses}
    return CommandResult("ok", payload,
                         f"{len(witnesses)} square classes up to {args.bound}: {witnesses}")


def _cmd_dy_dims(args) -> CommandResult:
    group = _parse_group(args.group)
    field = field_from_code(args.coeff)
    functor = dy.PointedFunctorData.identity(group, field)
    complex_ = dy.build_dy_complex(functor, args.nmax)
    dims = dy.dy_cohomology_dims(complex_)
    payload = {"group": list(group.cyclic_orders), "coeff": args.coeff,
               "nmax": args.nmax,
               "cochain_dims": list(complex_.cochain_dims),
               "h_dims": dims}
    return CommandResult("ok", payload,
                         _markdown_table(["n", "dim H^n"], list(enumerate(dims))))


def _cmd_dy_diagnostic(args) -> CommandResult:
    group = _parse_group(args.group)
    field = field_from_code(args.coeff)
    diag = dy.separability_diagnostic(group, field)
    payload = {"h2_dim": diag.h2_dim, "h3_dim": diag.h3_dim,
               "consistent_with_separability": diag.consistent_with_separability}
    return CommandResult("ok", payload,
                         f"H^2 = {diag.h2_dim}, H^3 = {diag.h3_dim}, "
                         f"consistent with separability: {diag.consistent_with_separability}")


def _cmd_fusion2_real(args) -> CommandResult:
    from .fieldprofile import BASE, COMPLEXIFICATION, QUATERNION
    classes = [BASE, COMPLEXIFICATION, QUATERNION]
    rows = []
    table = {}
    for d in classes:
        for e in classes:
            product = fusion2.real_division_tensor(d, e)
            rows.append((d.name, e.name, " + ".join(product.summands)))
            table[f"{d.name} x {e.name}"] = list(product.summands)
    return CommandResult("ok", {"table": table},
                         _markdown_table(["left", "right", "product"], rows))


def _cmd_fusion2_ffield(args) -> CommandResult:
    product = fusion2.finite_field_tensor(args.p, args.q, args.r)
    payload = {"p": args.p, "q": args.q, "r": args.r,
               "summands": list(product.summands),
               "r_copies_rule_holds": product.r_copies_rule_holds}
    note = "" if product.r_copies_rule_holds else \
        "  (does not match the min(q,r)-copies shortcut: it requires one degree to divide the other)"
    return CommandResult("ok", payload,
                         " + ".join(product.summands) + note)


def _cmd_fusion2_pointed(args) -> CommandResult:
    from .fieldprofile import alg_closed
    group = pointed.FiniteAbelianGroup((args.p,))
    classes = pointed.module_classes(group, alg_closed(0))
    zeta = pointed.BraidingParam(args.p, args.zeta)
    rows = []
    table = {}
    for a in classes:
        for b in classes:
            product = fusion2.pointed_braided_product(args.p, zeta, a, b)
            rows.append((a.label, b.label, " + ".join(product.summands)))
            table[f"{a.label} x {b.label}"] = list(product.summands)
    payload = {"p": args.p, "zeta_exponent": args.zeta, "table": table}
    return CommandResult("ok", payload, _markdown_table(["left", "right", "product"], rows))


# -- driver ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="modcat",
        description="Exact bookkeeping for based rings, module classes and fusion products.")
    parser.add_argument("--format", choices=["json", "md"], default="json",
                        help="output format (default json)")
    parser.add_argument("--field", dest="global_field", default=None,
                        help="default field profile code for subcommands that take one")
    parser.add_argument("--seedless", action="store_true",
                        help="accepted for interface stability; output is always deterministic")
    sub = parser.add_subparsers(dest="command", required=True)

    ring = sub.add_parser("ring", help="based ring operations").add_subparsers(
        dest="subcommand", required=True)
    p = ring.add_parser("validate");  p.add_argument("file");  p.set_defaults(func=_cmd_ring_validate)
    p = ring.add_parser("involutions"); p.add_argument("file"); p.set_defaults(func=_cmd_ring_involutions)
    p = ring.add_parser("homs")
    p.add_argument("source"); p.add_argument("target")
    p.add_argument("--cap-scale", type=int, default=1)
    p.set_defaults(func=_cmd_ring_homs)

    zmod = sub.add_parser("zmod", help="module operations").add_subparsers(
        dest="subcommand", required=True)
    p = zmod.add_parser("validate"); p.add_argument("file"); p.set_defaults(func=_cmd_zmod_validate)
    p = zmod.add_parser("enumerate")
    p.add_argument("file")
    p.add_argument("--cap-scale", type=int, default=1)
    p.add_argument("--indecomposable", action="store_true",
                   help="keep only indecomposable modules (irreducible ones always are)")
    p.set_defaults(func=_cmd_zmod_enumerate)

    twocat = sub.add_parser("twocat", help="2-category skeletons").add_subparsers(
        dest="subcommand", required=True)
    p = twocat.add_parser("validate"); p.add_argument("file"); p.set_defaults(func=_cmd_twocat_validate)
    p = twocat.add_parser("pi0"); p.add_argument("file"); p.set_defaults(func=_cmd_twocat_pi0)
    p = twocat.add_parser("family")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=_cmd_twocat_family)

    pt = sub.add_parser("pointed", help="pointed category bookkeeping").add_subparsers(
        dest="subcommand", required=True)
    p = pt.add_parser("classes")
    p.add_argument("--group", required=True, help="comma-separated invariant factors, e.g. 2,4")
    p.add_argument("--field", default=None)
    p.set_defaults(func=_cmd_pointed_classes)
    p = pt.add_parser("braidings")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--field", default=None)
    p.set_defaults(func=_cmd_pointed_braidings)
    p = pt.add_parser("squareclasses")
    p.add_argument("--bound", type=int, required=True)
    p.set_defaults(func=_cmd_pointed_squareclasses)

    dysub = sub.add_parser("dy", help="deformation cohomology").add_subparsers(
        dest="subcommand", required=True)
    p = dysub.add_parser("dims")
    p.add_argument("--group", required=True)
    p.add_argument("--coeff", required=True, help="q, fp<p> or cyclo<n>")
    p.add_argument("--nmax", type=int, default=4)
    p.set_defaults(func=_cmd_dy_dims)
    p = dysub.add_parser("diagnostic")
    p.add_argument("--group", required=True)
    p.add_argument("--coeff", required=True)
    p.set_defaults(func=_cmd_dy_diagnostic)

    fus = sub.add_parser("fusion2", help="fusion product tables").add_subparsers(
        dest="subcommand", required=True)
    p = fus.add_parser("real"); p.set_defaults(func=_cmd_fusion2_real)
    p = fus.add_parser("ffield")
    p.add_argument("p", type=int); p.add_argument("q", type=int); p.add_argument("r", type=int)
    p.set_defaults(func=_cmd_fusion2_ffield)
    p = fus.add_parser("pointed")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--zeta", type=int, required=True, help="exponent of the braiding root")
    p.set_defaults(func=_cmd_fusion2_pointed)

    return parser


def run(argv) -> tuple[CommandResult, int]:
    """Parse and execute; returns the structured result and the exit code."""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        result = args.func(args)
    except ModcatError as exc:
        payload = {"error": {"type": type(exc).__name__, "message": str(exc)}}
        for attr in ("indices", "index", "degree"):
            if hasattr(exc, attr):
                payload["error"][attr] = getattr(exc, attr)
        result = CommandResult("error", payload, f"error: {exc}")
    except FileNotFoundError as exc:
        result = CommandResult("error",
                               {"error": {"type": "FileNotFound", "message": str(exc)}},
                               f"error: {exc}")
    return result, result.exit_code


def render(result: CommandResult, fmt: str) -> str:
    body = dict(result.payload)
    body["status"] = result.status
    if fmt == "md" and result.human_table is not None:
        return result.human_table
    return json.dumps(body, indent=2, sort_keys=True)


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    # --format is global but argparse wants it before the subcommand; accept both
    fmt = "json"
    if "--format" in argv:
        i = argv.index("--format")
        if i + 1 < len(argv):
            fmt = argv[i + 1]
    result, code = run(argv)
    print(render(result, fmt))
    return code


if __name__ == "__main__":
    sys.exit(main())
