"""Command-line reports.

Exit codes: 0 all claims verified, 1 a claim failed, 2 usage error,
3 element cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

from .braid import (
    MAX_IMAGE_K,
    BraidRepSpec,
    VARIANTS,
    apply_word,
    basis_state,
    build_r_matrices,
    closed_form_identities,
    ghz_search,
    ghz_test,
    image_group,
    braid_hypotheses,
    verify_braid_presentation,
)
from .egroup import MAX_N, enumerate_group, rep_kernel
from .group_engine.classify import classify_e, decompose_e, predicted_label
from .group_engine.compare import compare_pauli, dq_product_group, comparison_cells
from .group_engine.finite import ClosureCapExceeded, default_cap
from .group_engine.nice_basis import nice_error_basis_check, representation
from .reports import Claim, Report

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
MAX_NICE_N = 8
MAX_COMPARE_K = (MAX_N - 1) // 2


class UsageError(ValueError):
    pass


def _require(ok: bool, message: str) -> None:
    if not ok:
        raise UsageError(message)


def _enforce_cap(size: int, cap: int) -> None:
    if size > cap:
        raise ClosureCapExceeded(cap)


def _e_name(n: int, nu: int) -> str:
    return f"E^{nu}_{n}"


# -- commands -----------------------------------------------------------------


def cmd_classify(n: int, nu: int, cap: int) -> Report:
    _require(1 <= n <= MAX_N, f"-n must be in 1..{MAX_N}")
    _enforce_cap(2 ** (n + 1), cap)
    name = _e_name(n, nu)
    rep = Report(f"classify {name}")
    grp = enumerate_group(n, nu)
    rep.add(Claim.check(
        "order", f"|{name}| = 2^(n+1)", grp.order == 2 ** (n + 1), {"order": grp.order}
    ))
    rec = classify_e(n, nu, strict=False)
    rep.add(Claim.check(
        "classification",
        f"{name} is isomorphic to {rec.label} ({rec.category})",
        rec.agrees,
        rec.to_json(),
    ))
    dec = decompose_e(n, nu, strict=False)
    rep.add(Claim.check(
        "decomposition",
        f"{name} is the central product {'∘'.join(dec.word)}",
        dec.passed and dec.label.predicted() == predicted_label(n, nu).predicted(),
        dec.to_json(),
    ))
    return rep


def _step_anchor(gens: str, factor: str, size: int) -> str:
    if factor in ("Z2", "Z4"):
        return f"<{gens}> is a central {factor} factor"
    if size == 2:
        return f"<{gens}> is a {factor} factor"
    return f"<{gens}> is a {factor} factor centralizing e1..e{size - 2}"


def cmd_decompose(n: int, nu: int, cap: int) -> Report:
    _require(1 <= n <= MAX_N, f"-n must be in 1..{MAX_N}")
    _enforce_cap(2 ** (n + 1), cap)
    dec = decompose_e(n, nu, strict=False)
    rep = Report(f"decompose {_e_name(n, nu)}")
    for step in dec.steps:
        gens = ", ".join(step.k_generators)
        rep.add(Claim.check(
            f"step {step.size}",
            _step_anchor(gens, step.expected_factor, step.size),
            step.passed,
            {"factor": step.factor, "square_sign": step.square_sign, **step.checks},
        ))
    rep.details = dec.to_json()
    return rep


def cmd_table1(cap: int) -> Report:
    _enforce_cap(2 ** 10, cap)
    rep = Report("table1")
    for cell in comparison_cells():
        rep.add(Claim.check(
            cell.name,
            f"{cell.column} at k={cell.k} is {cell.label}",
            cell.passed,
            {"observed": list(cell.observed), "predicted": list(cell.predicted)},
        ))
    dd, qq = dq_product_group("DD"), dq_product_group("QQ")
    rep.add(Claim.check(
        "D^2 = Q^2",
        "D∘D and Q∘Q are isomorphic",
        dd.invariants == qq.invariants,
        {"DD": list(dd.invariants), "QQ": list(qq.invariants)},
    ))
    return rep


def cmd_compare(k: int, cap: int) -> Report:
    _require(1 <= k <= MAX_COMPARE_K, f"-k must be in 1..{MAX_COMPARE_K}")
    _enforce_cap(2 ** (2 * k + 2), cap)
    res = compare_pauli(k)
    rep = Report(f"compare k={k}")
    for v in res.verdicts:
        rep.add(Claim.check(v.claim, v.claim, v.passed, v.to_json()))
    for ident, ok in res.pauli_recovery.items():
        rep.add(Claim.check(
            f"pauli from e {ident}",
            f"{ident} is expressed through the images of e_1..e_2k",
            ok,
        ))
    rep.details = {"histograms": res.to_json()["histograms"], "center_types": res.center_types}
    return rep


def cmd_nice_basis(n: int, nu: int, kind: str, cap: int) -> Report:
    _require(2 <= n <= MAX_NICE_N, f"-n must be in 2..{MAX_NICE_N}")
    _enforce_cap(2 ** (n + 1), cap)
    try:
        images = representation(n, nu, kind)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    name = _e_name(n, nu)
    res = nice_error_basis_check(n, nu, images)
    rep = Report(f"nice-basis {name} ({kind})")
    rep.add(Claim.check("identity", "the identity coset maps to I", res.identity_ok))
    rep.add(Claim.check(
        "traceless", "every other coset representative is traceless", res.traceless_ok
    ))
    rep.add(Claim.check(
        "orthogonal", "representatives are trace-orthogonal", res.orthogonal_ok
    ))
    rep.add(Claim.check(
        "projective",
        "products of representatives are phases times representatives",
        res.projective_ok,
    ))
    rep.add(Claim.check(
        "omega cyclic",
        "the phases omega generate a cyclic group",
        res.omega_cyclic,
        [str(w) for w in res.omega_values],
    ))
    rep.add(Claim.check(
        "degree",
        "degree d = 2^k with d^2 equal to the index-group order",
        res.degree_ok,
        {"degree": res.degree, "index_order": res.index_order},
    ))
    kernel = rep_kernel(n, nu, images)
    rep.add(Claim(
        "faithful",
        f"the representation of {name} is faithful",
        "verified" if not kernel else "flagged",
        {"kernel": [str(g) for g in kernel]},
    ))
    rep.details = res.to_json()
    return rep


def cmd_braid(
    k: int, variant: str, cap: int, *, image: bool = True, force_image: bool = False
) -> Report:
    _require(k >= 1, "-k must be >= 1")
    _require(k <= 6, "-k above 6 is outside the relation-check bound")
    spec = BraidRepSpec(k, variant)
    rep = Report(f"braid k={k} {variant}")
    hyp = braid_hypotheses(k, variant)
    rep.add(Claim.check(
        "hypotheses",
        "T_i^2 = -I, far commutation, adjacent anticommutation, T_i anti-Hermitian",
        hyp.passed,
        hyp.to_json(),
    ))
    rel = verify_braid_presentation(build_r_matrices(spec))
    rep.add(Claim.check(
        "braid relations",
        "R_i satisfy far commutation and R_i R_i+1 R_i = R_i+1 R_i R_i+1, and are unitary",
        rel.passed,
        {"checked": rel.checked, "failures": rel.failures},
    ))
    closed = closed_form_identities(spec)
    rep.add(Claim.check(
        "closed form",
        "R_i = e^(pi/4 T_i), matching the explicit d, D, f matrices",
        all(closed.values()),
        [name for name, ok in closed.items() if not ok],
    ))
    details: dict = {
        "spec": spec.to_json(),
        "relations_checked": rel.checked,
        "failures": rel.failures,
        "image": None,
    }

    gated = spec.k > MAX_IMAGE_K and not force_image
    if not image or gated:
        reason = "--no-image" if not image else f"k > {MAX_IMAGE_K} needs --force-image"
        rep.add(Claim("image", "finite image of the braid group", "skipped", reason))
    else:
        im = image_group(spec, cap, allow_large=True)
        details["image"] = im.to_json()
        n = spec.strands
        rep.add(Claim.check(
            "pure image normal",
            "the pure braid image is normal in the braid image",
            im.pure_is_normal(sample=None if im.pure_image.order <= 64 else 64),
        ))
        if variant in ("unscaled", "jones"):
            nu = -1 if variant == "unscaled" else 1
            target = enumerate_group(2 * k, nu)
            rep.add(Claim.check(
                "pure image",
                f"the pure braid image is isomorphic to {_e_name(2 * k, nu)}",
                im.pure_image.invariants == target.invariants,
                {
                    "pure": list(im.pure_image.invariants),
                    _e_name(2 * k, nu): list(target.invariants),
                    "squares_only": list(im.square_subgroup.invariants),
                },
            ))
            rep.add(Claim.check(
                "symmetric quotient",
                f"the braid image modulo the pure image is S_{n}",
                im.consistency and im.factorizes,
                {"order": im.group.order, "pure_order": im.pure_image.order,
                 "consistency": im.consistency},
            ))
        else:
            rep.add(Claim(
                "permutation consistency",
                "each image matrix determines its strand permutation",
                "verified" if im.consistency and im.factorizes else "flagged",
                {"order": im.group.order, "pure_order": im.pure_image.order,
                 "consistency": im.consistency},
            ))
    rep.details = details
    return rep


def cmd_ghz(k: int, variant: str, max_len: int) -> Report:
    _require(1 <= k <= 3, "-k must be in 1..3")
    _require(0 <= max_len <= 12, "--max-len must be in 0..12")
    spec = BraidRepSpec(k, variant)
    word = ghz_search(spec, max_len)
    rep = Report(f"ghz k={k} {variant}")
    ghz = None
    if word is not None:
        match = ghz_test(apply_word(spec, word, basis_state(spec.dim)))
        ghz = {"word": str(word), "letters": list(word.letters),
               "phase": str(match.phase), "a": match.a}
    rep.add(Claim.check(
        "ghz word",
        f"some braid word of length <= {max_len} maps |0...0> to a GHZ state",
        ghz is not None,
        ghz if ghz is not None else "none within bound",
    ))
    rep.details = {"spec": spec.to_json(), "ghz": ghz}
    return rep


# -- entry point --------------------------------------------------------------


def _positive(text: str) -> int:
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="errorgroups",
        description="Exact verification reports for the groups E^nu_n, Pauli groups "
        "and the braid representations built from them.",
    )
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--cap", type=_positive, default=None,
                        help="element cap for closures (default: $BEG_ELEMENT_CAP or 10^7)")
    parent.add_argument("--format", choices=("text", "json"), default="text")
    parent.add_argument("-o", "--output", default=None, help="write the report here")

    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("classify", "decompose"):
        p = sub.add_parser(name, parents=[parent])
        p.add_argument("-n", type=int, required=True)
        p.add_argument("--nu", type=int, choices=(-1, 1), default=-1)
    sub.add_parser("table1", parents=[parent])
    p = sub.add_parser("compare", parents=[parent])
    p.add_argument("-k", type=int, required=True)
    p = sub.add_parser("nice-basis", parents=[parent])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--nu", type=int, choices=(-1, 1), default=-1)
    p.add_argument("--rep", choices=("auto", "rho", "lambda1", "lambda2"), default="auto")
    p = sub.add_parser("braid", parents=[parent])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="unscaled")
    p.add_argument("--no-image", action="store_true", help="skip the finite image closure")
    p.add_argument("--force-image", action="store_true",
                   help=f"compute the image even for k > {MAX_IMAGE_K}")
    p = sub.add_parser("ghz", parents=[parent])
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--variant", choices=VARIANTS, default="unscaled")
    p.add_argument("--max-len", type=int, default=6)
    return parser


def run(args: argparse.Namespace) -> Report:
    if args.cap is not None:
        cap = args.cap
    else:
        try:
            cap = default_cap()
        except ValueError as exc:
            raise UsageError(f"BEG_ELEMENT_CAP: {exc}") from exc
    if args.command == "classify":
        return cmd_classify(args.n, args.nu, cap)
    if args.command == "decompose":
        return cmd_decompose(args.n, args.nu, cap)
    if args.command == "table1":
        return cmd_table1(cap)
    if args.command == "compare":
        return cmd_compare(args.k, cap)
    if args.command == "nice-basis":
        return cmd_nice_basis(args.n, args.nu, args.rep, cap)
    if args.command == "braid":
        return cmd_braid(args.k, args.variant, cap,
                         image=not args.no_image, force_image=args.force_image)
    return cmd_ghz(args.k, args.variant, args.max_len)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        report = run(args)
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ClosureCapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = report.dumps() if args.format == "json" else report.to_text()
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
