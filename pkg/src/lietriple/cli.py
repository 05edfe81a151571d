"""Command line: verify, cohomology, construct, extract-cocycle, fixtures.

Exit status is 0 when every check passes, 1 when a check fails (the report
is still printed) and 2 on unreadable or invalid input.
"""

import argparse
import json
import os
import sys
from importlib import resources

from . import documents as docs
from .cochain import SizeLimitError
from .cohomology import h3445_dims, is_cocycle_3445, yamaguti_h_dims
from .crossed import (crossed_from_leibniz, crossed_from_reductive, crossed_from_strict,
                      exactness_report, extract_theta, induced_report, induced_representation,
                      section_independence, section_report, strict_from_crossed,
                      verify_crossed_module, verify_leibniz_crossed, verify_reductive_crossed)
from .exactla import DimensionError, rational_str
from .lya import (InvalidInput, adl_homomorphism_report, fundamental_leibniz, leibniz_to_lya,
                  lie_to_lya, omni_lie, reductive_to_lya, verify_leibniz, verify_lie, verify_ly)
from .report import AxiomEntry, AxiomReport
from .rep import adjoint_rep, check_action, semidirect, verify_rep
from .twoterm import E1_CONVENTIONS, skeletal_from_data, verify_homomorphism, verify_two_term


class InputError(Exception):
    """Bad command-line input; exit status 2."""


class Failed(Exception):
    """A precondition failed; the report so far is printed with exit status 1."""

    def __init__(self, report):
        super().__init__("precondition failed")
        self.report = report


class Result:
    def __init__(self):
        self.checks = AxiomReport()
        self.results = {}
        self.document = None

    def extend(self, report, prefix=""):
        self.checks.extend(report, prefix)

    def require(self, report, prefix):
        self.extend(report, prefix)
        if not report.passed:
            raise Failed(self)

    @property
    def passed(self):
        return self.checks.passed


# input files

def fixture_names():
    root = resources.files("lietriple") / "fixtures"
    return sorted(p.name[:-5] for p in root.iterdir() if p.name.endswith(".json"))


def fixture_text(name):
    return (resources.files("lietriple") / "fixtures" / (name + ".json")).read_text("utf-8")


def _read_text(path):
    """File contents; a missing fixtures/<name>.json falls back to the packaged copy."""
    if os.path.exists(path):
        with open(path, encoding="utf-8") as f:
            return f.read()
    stem, ext = os.path.splitext(os.path.basename(path))
    parent = os.path.basename(os.path.dirname(path))
    if ext == ".json" and parent in ("fixtures", "") and stem in fixture_names():
        return fixture_text(stem)
    raise InputError("%s: no such file" % path)


def _load(path, kind):
    try:
        return docs.parse(_read_text(path), kind)
    except docs.SchemaError as exc:
        raise InputError("%s: %s" % (path, exc))
    except DimensionError as exc:
        raise InputError("%s: dimension mismatch: %s" % (path, exc))


def _cocycle_entry(label, res):
    if res.is_cocycle:
        return AxiomEntry(label, True)
    name, args, o = res.witness
    return AxiomEntry(label, False, (name, tuple(int(i) for i in args), int(o)), (res.value,))


def _report(entries):
    out = AxiomReport()
    for e in entries:
        out.add(e)
    return out


def _dims_dict(res, bases):
    return res.to_dict(bases=bases)


# commands

_VERIFY_FILES = {"rep": ("algebra", "rep"), "action": ("algebra", "action"),
                 "quadruple": ("algebra", "rep", "quadruple")}


def cmd_verify(args, res):
    kind = args.kind
    need = _VERIFY_FILES.get(kind, (kind,))
    if len(args.files) != len(need):
        raise InputError("verify %s takes %d file(s): %s" % (kind, len(need), " ".join(need)))
    if kind in _VERIFY_FILES:
        a = _load(args.files[0], "lya")
        res.require(verify_ly(a), "algebra-")
        if kind == "rep":
            r = _load(args.files[1], "rep")
            _match(a, r)
            res.extend(verify_rep(a, r))
        elif kind == "action":
            act = _load(args.files[1], "action")
            _match(a, act.rep)
            res.extend(check_action(a, act))
        else:
            r = _load(args.files[1], "rep")
            _match(a, r)
            res.require(verify_rep(a, r), "rep-")
            q = _load(args.files[2], "quadruple")
            if (q.source_dim, q.target_dim) != (a.dim, r.module_dim):
                raise InputError("quadruple has dims (%d, %d), expected (%d, %d)"
                                 % (q.source_dim, q.target_dim, a.dim, r.module_dim))
            res.checks.add(_cocycle_entry("cocycle", is_cocycle_3445(q, a, r, check=False)))
        return
    obj = _load(args.files[0], kind)
    if kind == "lya":
        res.extend(verify_ly(obj))
    elif kind == "lie":
        res.extend(verify_lie(obj))
    elif kind == "leibniz":
        res.extend(verify_leibniz(obj))
    elif kind == "twoterm":
        res.extend(verify_two_term(obj, args.e1))
    elif kind == "homomorphism":
        res.extend(verify_two_term(obj.source, args.e1), "source-")
        res.extend(verify_two_term(obj.target, args.e1), "target-")
        res.extend(verify_homomorphism(obj.source, obj.target, obj.hom))
    elif kind == "crossed":
        res.extend(verify_crossed_module(obj))
    elif kind == "leibniz-crossed":
        res.extend(verify_leibniz_crossed(obj))
    elif kind == "reductive":
        res.extend(obj.report())
    elif kind == "reductive-crossed":
        res.extend(verify_reductive_crossed(obj))
    elif kind == "extension":
        res.extend(exactness_report(obj))
        res.extend(induced_report(obj))
    # cochain and sections documents carry no axioms beyond their schema


def _match(a, r):
    if a.dim != r.algebra_dim:
        raise InputError("dimension mismatch: algebra has dimension %d, representation expects %d"
                         % (a.dim, r.algebra_dim))


def cmd_cohomology(args, res):
    a = _load(args.algebra, "lya")
    r = _load(args.rep, "rep")
    _match(a, r)
    res.require(verify_ly(a), "algebra-")
    res.require(verify_rep(a, r), "rep-")
    group = args.group
    res.results["group"] = group
    if group == "3445":
        h = h3445_dims(a, r, check=False)
    elif group.startswith("yamaguti:"):
        try:
            n = int(group.split(":", 1)[1])
        except ValueError:
            raise InputError("--group yamaguti:<n> needs an integer n")
        if n < 2:
            raise InputError("--group yamaguti:<n> needs n >= 2")
        h = yamaguti_h_dims(n, a, r, check=False)
    else:
        raise InputError("--group must be 3445 or yamaguti:<n>")
    res.results.update(_dims_dict(h, args.bases))


def _c_omni(args, res):
    if args.n is None or args.n < 1:
        raise InputError("omni-lie needs --n N with N >= 1")
    out = omni_lie(args.n)
    res.extend(verify_ly(out), "output-")
    return out


def _c_from_lie(args, res):
    g = _load(_one(args), "lie")
    res.require(verify_lie(g), "input-")
    out = lie_to_lya(g)
    res.extend(verify_ly(out), "output-")
    return out


def _c_from_leibniz(args, res):
    l = _load(_one(args), "leibniz")
    res.require(verify_leibniz(l), "input-")
    out = leibniz_to_lya(l)
    res.extend(verify_ly(out), "output-")
    return out


def _c_reductive(args, res):
    dec = _load(_one(args), "reductive")
    res.require(verify_lie(dec.lie), "input-")
    out = reductive_to_lya(dec)
    res.extend(verify_ly(out), "output-")
    return out


def _c_semidirect(args, res):
    a_path, act_path = _files(args, 2)
    a = _load(a_path, "lya")
    act = _load(act_path, "action")
    _match(a, act.rep)
    res.require(verify_ly(a), "input-")
    res.require(check_action(a, act), "action-")
    out = semidirect(a, act)
    res.extend(verify_ly(out), "output-")
    return out


def _c_skeletal(args, res):
    a_path, r_path, q_path = _files(args, 3)
    a = _load(a_path, "lya")
    r = _load(r_path, "rep")
    q = _load(q_path, "quadruple")
    _match(a, r)
    if (q.source_dim, q.target_dim) != (a.dim, r.module_dim):
        raise InputError("quadruple has dims (%d, %d), expected (%d, %d)"
                         % (q.source_dim, q.target_dim, a.dim, r.module_dim))
    res.require(verify_ly(a), "input-")
    res.require(verify_rep(a, r), "rep-")
    res.require(_report([_cocycle_entry("cocycle", is_cocycle_3445(q, a, r, check=False))]),
                "input-")
    out = skeletal_from_data(a, r, q, check=False)
    res.extend(verify_two_term(out), "output-")
    return out


def _c_strict(args, res):
    c = _load(_one(args), "crossed")
    res.require(verify_crossed_module(c), "input-")
    out = strict_from_crossed(c, check=False)
    res.extend(verify_two_term(out), "output-")
    return out


def _c_crossed_from_strict(args, res):
    t = _load(_one(args), "twoterm")
    res.require(verify_two_term(t), "input-")
    out = crossed_from_strict(t)
    res.extend(verify_crossed_module(out), "output-")
    return out


def _c_crossed_from_leibniz(args, res):
    lc = _load(_one(args), "leibniz-crossed")
    res.require(verify_leibniz_crossed(lc), "input-")
    out = crossed_from_leibniz(lc, check=False)
    res.extend(verify_crossed_module(out), "output-")
    return out


def _c_crossed_from_reductive(args, res):
    rc = _load(_one(args), "reductive-crossed")
    res.require(verify_reductive_crossed(rc), "input-")
    out = crossed_from_reductive(rc, check=False)
    res.extend(verify_crossed_module(out), "output-")
    return out


def _c_fundamental(args, res):
    a = _load(_one(args), "lya")
    res.require(verify_ly(a), "input-")
    out = fundamental_leibniz(a)
    res.extend(verify_leibniz(out), "output-")
    res.extend(adl_homomorphism_report(a), "output-")
    return out


def _c_adjoint(args, res):
    a = _load(_one(args), "lya")
    res.require(verify_ly(a), "input-")
    out = adjoint_rep(a)
    res.extend(verify_rep(a, out), "output-")
    return out


RECIPES = {
    "omni-lie": _c_omni,
    "from-lie": _c_from_lie,
    "from-leibniz": _c_from_leibniz,
    "reductive": _c_reductive,
    "semidirect": _c_semidirect,
    "skeletal": _c_skeletal,
    "strict": _c_strict,
    "crossed-from-strict": _c_crossed_from_strict,
    "crossed-from-leibniz": _c_crossed_from_leibniz,
    "crossed-from-reductive": _c_crossed_from_reductive,
    "fundamental-leibniz": _c_fundamental,
    "adjoint": _c_adjoint,
}


def _files(args, n):
    if len(args.inputs) != n:
        raise InputError("construct %s takes %d input file(s), got %d"
                         % (args.recipe, n, len(args.inputs)))
    return args.inputs


def _one(args):
    return _files(args, 1)[0]


def cmd_construct(args, res):
    if args.recipe != "omni-lie" and args.n is not None:
        raise InputError("--n only applies to omni-lie")
    if args.recipe == "omni-lie" and args.inputs:
        raise InputError("omni-lie takes no input files")
    out = RECIPES[args.recipe](args, res)
    res.document = docs.to_document(out)


def cmd_extract(args, res):
    e = _load(args.extension, "extension")
    res.require(exactness_report(e), "")
    res.require(induced_report(e), "")
    theta = extract_theta(e, check=False)
    M = induced_representation(e, check=False)
    res.checks.add(_cocycle_entry("cocycle", is_cocycle_3445(theta, e.t, M, check=False)))
    res.results["theta_zero"] = theta.is_zero()
    if args.alt_sections:
        alt = _load(args.alt_sections, "sections")
        want = (e.s.shape, e.q.shape)
        if (alt.s.shape, alt.q.shape) != want:
            raise InputError("alternative sections have shapes %s, %s; expected %s, %s"
                             % (alt.s.shape, alt.q.shape, *want))
        res.require(section_report(e, alt.s, alt.q), "alt-")
        ok = section_independence(e, alt.s, alt.q, check=False)
        res.checks.add(AxiomEntry("section-independence", bool(ok)))
    res.document = docs.to_document(theta, "quadruple")


def cmd_fixtures(args, res):
    if args.name is None:
        res.results["fixtures"] = fixture_names()
        return
    if args.name not in fixture_names():
        raise InputError("no packaged fixture named %r" % args.name)
    res.document = json.loads(fixture_text(args.name))


# rendering

def render_json(argv, res):
    out = {"command": list(argv), "pass": res.passed,
           "checks": [e.to_dict() for e in res.checks.entries]}
    if res.results:
        out["results"] = res.results
    if res.document is not None and not getattr(res, "written", False):
        out["document"] = res.document
    return docs.dumps(out)


def _fmt(values):
    return "(%s)" % ", ".join(rational_str(v) if not isinstance(v, (str, tuple)) else str(v)
                              for v in values)


def render_text(argv, res, verbose=False):
    lines = ["command: %s" % " ".join(argv)]
    for e in res.checks.entries:
        if e.passed:
            if verbose:
                lines.append("pass  %s" % e.label)
        else:
            lines.append("FAIL  %s  witness %s  defect %s" % (e.label, _fmt(e.witness),
                                                             _fmt(e.defect)))
    n = len(res.checks.entries)
    if n:
        lines.append("checks: %d passed, %d failed" % (n - len(res.checks.failed()),
                                                       len(res.checks.failed())))
    r = res.results
    if "dim_Z" in r:
        lines.append("dims: Z=%d B=%d H=%d" % (r["dim_Z"], r["dim_B"], r["dim_H"]))
        for key in ("cocycle_basis", "coboundary_basis"):
            if key in r:
                lines.append("%s:" % key)
                lines.extend("  [%s]" % ", ".join(v) for v in r[key])
    if "theta_zero" in r:
        lines.append("theta: %s" % ("zero" if r["theta_zero"] else "nonzero"))
    if "fixtures" in r:
        lines.extend(r["fixtures"])
    if res.document is not None and not getattr(res, "written", False):
        lines.append("document:")
        lines.append(docs.dumps(res.document).rstrip("\n"))
    lines.append("overall: %s" % ("PASS" if res.passed else "FAIL"))
    return "\n".join(lines) + "\n"


# argument parsing

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="format", action="store_const", const="json",
                     help="machine-readable report")
    fmt.add_argument("--text", dest="format", action="store_const", const="text",
                     help="human-readable report (default)")
    common.add_argument("--verbose", action="store_true", help="list passing checks too")

    p = argparse.ArgumentParser(prog="lietriple",
                                description="Exact checks and cohomology for Lie-Yamaguti "
                                            "algebras and their 2-term L-infinity analogues.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="check the axioms of a document")
    v.add_argument("kind", choices=docs.KINDS)
    v.add_argument("files", nargs="+",
                   help="the document; rep and action also take the algebra first, "
                        "quadruple takes algebra, rep, quadruple")
    v.add_argument("--e1", choices=E1_CONVENTIONS, default="cyclic",
                   help="reading of condition (e1) for twoterm documents")
    v.set_defaults(func=cmd_verify)

    c = sub.add_parser("cohomology", parents=[common], help="dimensions of Z, B and H")
    c.add_argument("algebra")
    c.add_argument("rep")
    c.add_argument("--group", required=True, help="3445 or yamaguti:<n> with n >= 2")
    c.add_argument("--bases", action="store_true", help="also print echelon bases")
    c.set_defaults(func=cmd_cohomology)

    k = sub.add_parser("construct", parents=[common], help="build a document from inputs")
    k.add_argument("recipe", choices=sorted(RECIPES))
    k.add_argument("inputs", nargs="*")
    k.add_argument("--n", type=int, help="size for omni-lie")
    k.add_argument("-o", "--output", help="write the document here instead of the report")
    k.set_defaults(func=cmd_construct)

    x = sub.add_parser("extract-cocycle", parents=[common],
                       help="the (3,4,4,5)-cocycle of a crossed module extension")
    x.add_argument("extension")
    x.add_argument("--alt-sections", help="sections document to compare against")
    x.add_argument("-o", "--output", help="write the quadruple document here")
    x.set_defaults(func=cmd_extract)

    f = sub.add_parser("fixtures", parents=[common], help="list or print packaged fixtures")
    f.add_argument("name", nargs="?")
    f.set_defaults(func=cmd_fixtures)
    return p


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    res = Result()
    try:
        args.func(args, res)
    except Failed:
        pass
    except (InputError, SizeLimitError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    except InvalidInput as exc:
        if len(exc.args) > 1 and isinstance(exc.args[1], AxiomReport):
            res.extend(exc.args[1], "input-")
        else:
            print("error: %s" % exc.args[0], file=sys.stderr)
            return 2
    except DimensionError as exc:
        print("error: dimension mismatch: %s" % exc, file=sys.stderr)
        return 2
    output = getattr(args, "output", None)
    if output and res.document is not None:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(docs.dumps(res.document))
        res.written = True
    if args.format == "json":
        sys.stdout.write(render_json(argv, res))
    else:
        sys.stdout.write(render_text(argv, res, args.verbose))
    return 0 if res.passed else 1


if __name__ == "__main__":
    sys.exit(main())
