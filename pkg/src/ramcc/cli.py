"""
ramcc {validate|invariants|swan|cc|compare|nearby} FILE... [--json] [--precision N] [--seed S] [--jobs J] [--psi K] [--timings]

Exit code 0 when everything was computed and every identity held, 1 when two computations that a theorem says agree
did not, 2 when a document or its data could not support the computation.
"""
from typing import List, Optional, Callable
from pathlib import Path
from concurrent.futures import ProcessPoolExecutor

import click
from tqdm.auto import tqdm
from tktkt.util.printing import wprint
from tktkt.util.timing import timeit

from . import __version__
from .config import Defaults
from .formats.document import InputDocument, readDocument
from .formats.instances import Instance, buildInstance, buildTriple, instanceRepresentations
from .formats.reports import Report, dumpJson, printHuman
from .ramification.data import RamificationData
from .kato.swan import katoDifferent, differentCheck, swanDiffval, integralityCheck, kcc, rank1Check, inductionCheck, towerLawCheck
from .abbessaito.comparison import ccWithDecomposition, compareCcKcc, ccInductionCheck, psiIndependenceCheck, presentable, hasseArfCheck
from .nearby.cycles import eulerNearby, dimtotHorizontal, dimtotVertical
from .errors import RamccError

COMMANDS = ("validate", "invariants", "swan", "cc", "compare", "nearby")


def invariantsJson(D: RamificationData) -> dict:
    return {
        "p": D.p,
        "n": D.n,
        "degree": D.degree(),
        "conductor": D.conductor,
        "rho": D.rho,
        "s": D.s,
        "wild": [D.elementLabel(i) for i in D.wild],
        "elements": [{"index": i, "label": D.elementLabel(i), "jump": D.jumps[i], "unit": D.units[i].toString()}
                     for i in range(1, len(D.group))],
        "fbar": D.fbar.toString(),
        "abar0": D.abar0.toString(),
        "hbar": D.hbar.toString()
    }


def _runValidate(instance: Instance, report: Report):
    D = instance.data
    D.group.checkAxioms(seed=instance.tower.seed)
    report.results = {
        "degree": D.degree(),
        "model": "O_L" if instance.spec is not None else "abstract",
        "precision": instance.spec.precision if instance.spec is not None else None,
        "group": [D.elementLabel(i) for i in range(len(D.group))],
        "abelian": D.group.isAbelian()
    }
    report.addCheck(differentCheck(D))
    if 1 < len(D.wild) < len(D.group):
        report.addCheck(towerLawCheck(D, D.wild, instance.tower))


def _runInvariants(instance: Instance, report: Report):
    D = instance.data
    report.results = invariantsJson(D)
    report.results["different"] = katoDifferent(D).toString()
    report.addCheck(differentCheck(D))


def _singleTerm(rep):
    return rep.terms[0] if len(rep.terms) == 1 and rep.terms[0].multiplicity == 1 else None


def _runSwan(instance: Instance, report: Report):
    D = instance.data
    entries = []
    for label, rep in instanceRepresentations(instance):
        sw = swanDiffval(rep, D, instance.psi)
        integrality = integralityCheck(sw)
        report.addCheck(integrality)
        entry = {"representation": label, "dimension": rep.dimension(), "sw": sw.toString(), "symbol": sw.toJson(),
                 "integral": integrality.passed}
        if integrality.passed:
            entry["kcc"] = kcc(rep, D, instance.psi).toJson()

        term = _singleTerm(rep)
        if term is not None and set(D.wild) <= set(term.character.subgroup) and not term.character.isTrivialOn(D.wild):
            if term.character.index() == 1:
                report.addCheck(rank1Check(term.character, D, instance.psi))
            else:
                report.addCheck(inductionCheck(term.character, D, instance.psi))
        entries.append(entry)
    report.results = {"conductor": D.conductor, "representations": entries}


def _runCc(instance: Instance, report: Report):
    D = instance.data
    entries = []
    for label, rep in instanceRepresentations(instance):
        form, decomposition = ccWithDecomposition(rep, D, instance.tower, instance.psi)
        entries.append({"representation": label, "cc": presentable(form, D.n).toJson(), "hasse_arf": hasseArfCheck(form, D.n),
                        "decomposition": decomposition.toJson()})
    report.results = {"representations": entries}


def _runCompare(instance: Instance, report: Report):
    D = instance.data
    entries = []
    for label, rep in instanceRepresentations(instance):
        comparison = compareCcKcc(rep, D, instance.tower, instance.psi, raise_on_mismatch=False)
        if not comparison.equal:
            report.diagnostics.append({"check": "cc = kcc", "passed": False, "left": comparison.cc.toString(),
                                       "right": comparison.kcc.toString(), "details": {"representation": label}})
            report.exit_code = max(report.exit_code, 1)

        term = _singleTerm(rep)
        if term is not None and term.character.index() > 1 and set(D.wild) <= set(term.character.subgroup) \
                and not term.character.isTrivialOn(D.wild):
            comparison.checks.append(ccInductionCheck(term.character, D, instance.tower, instance.psi))
        if D.p > 2:
            comparison.checks.append(psiIndependenceCheck(rep, D, instance.tower))
        report.addChecks(comparison.checks)

        entry = comparison.toJson()
        entry["representation"] = label
        entries.append(entry)
    report.results = {"representations": entries}


def _runNearby(document: InputDocument, instance: Optional[Instance], report: Report):
    triple = buildTriple(document, instance)
    result = eulerNearby(triple)
    report.results = result.toJson()
    report.results["horizontal"] = [dimtotHorizontal(point) for point in triple.horizontal]
    report.results["vertical"] = [{"label": point.label, "dimtot": dimtotVertical(point)} for point in triple.vertical]


def run(document: InputDocument, command: str, precision: Optional[int]=None, seed: int=0, psi: Optional[int]=None) -> Report:
    """Run one command on one document. Errors of RamCC end up in the report; anything else is a bug and propagates."""
    if command not in COMMANDS:
        raise ValueError(f"Unknown command '{command}'; expected one of {COMMANDS}.")
    psi = psi or Defaults.psiExponent()
    report = Report(command, document.source, seed, psi)
    try:
        if command == "nearby":
            needs_instance = document.extension is not None or document.abstract is not None
            instance = buildInstance(document, precision, seed, psi) if needs_instance else None
            _runNearby(document, instance, report)
        else:
            instance = buildInstance(document, precision, seed, psi)
            {"validate": _runValidate, "invariants": _runInvariants, "swan": _runSwan,
             "cc": _runCc, "compare": _runCompare}[command](instance, report)
    except RamccError as e:
        report.fail(e)
    return report


def runFile(path: Path, command: str, precision: Optional[int]=None, seed: int=0, psi: Optional[int]=None) -> Report:
    try:
        document = readDocument(path)
    except RamccError as e:
        report = Report(command, path.name, seed, psi or Defaults.psiExponent())
        report.fail(e)
        return report
    return run(document, command, precision, seed, psi)


def _runStar(arguments) -> Report:
    return runFile(*arguments)


def runFiles(paths: List[Path], command: str, precision: Optional[int]=None, seed: int=0, psi: Optional[int]=None,
             jobs: int=1, progress: bool=True, timings: bool=False) -> List[Report]:
    """Reports come back in the order of the paths, whatever the number of jobs."""
    arguments = [(path, command, precision, seed, psi) for path in paths]
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            return list(tqdm(executor.map(_runStar, arguments), total=len(arguments), desc=command, disable=not progress))

    runner: Callable = timeit(_runStar) if timings else _runStar
    return [runner(a) for a in tqdm(arguments, desc=command, disable=not progress or len(arguments) == 1)]


########################################################################################################################


def _options(f):
    f = click.argument("files", nargs=-1, required=True, type=click.Path(exists=True, dir_okay=False, path_type=Path))(f)
    f = click.option("--json", "as_json", is_flag=True, help="Print JSON instead of tables.")(f)
    f = click.option("--precision", type=click.IntRange(min=1), default=None, help=f"t-adic working precision (overrides the document and {Defaults.__name__} rule).")(f)
    f = click.option("--seed", type=int, default=Defaults.seed(), show_default=True, help="Seed for randomised choices.")(f)
    f = click.option("--jobs", type=click.IntRange(min=1), default=1, show_default=True, help="Documents processed in parallel.")(f)
    f = click.option("--psi", type=click.IntRange(min=1), default=Defaults.psiExponent(), show_default=True, help="ψ₀(1) = ζ_p^K.")(f)
    f = click.option("--timings", is_flag=True, help="Print how long each document took (not with --json).")(f)
    return f


def _execute(command: str, files, as_json: bool, precision: Optional[int], seed: int, jobs: int, psi: int, timings: bool):
    if not as_json and len(files) > 1:
        wprint(f"Running '{command}' on {len(files)} documents...")
    reports = runFiles(list(files), command, precision, seed, psi, jobs, progress=not as_json, timings=timings and not as_json)
    if as_json:
        click.echo(dumpJson(reports))
    else:
        for report in reports:
            printHuman(report)
    raise SystemExit(max(report.exit_code for report in reports))


@click.group()
@click.version_option(__version__, prog_name="ramcc")
def main():
    """Exact ramification invariants and characteristic cycles of type (II) extensions."""


@main.command()
@_options
def validate(**kwargs):
    """Check that the extension is what it claims to be."""
    _execute("validate", **kwargs)


@main.command()
@_options
def invariants(**kwargs):
    """Jumps, conductor, Herbrand value, G^c, f̄_c and the different."""
    _execute("invariants", **kwargs)


@main.command()
@_options
def swan(**kwargs):
    """Kato's Swan conductor with differential values, and kcc."""
    _execute("swan", **kwargs)


@main.command()
@_options
def cc(**kwargs):
    """Abbes-Saito's characteristic cycle through the slope decomposition."""
    _execute("cc", **kwargs)


@main.command()
@_options
def compare(**kwargs):
    """cc against kcc, with the identities around them."""
    _execute("compare", **kwargs)


@main.command()
@_options
def nearby(**kwargs):
    """φ(s), φ(η) and dim Ψ¹ of a stable triple."""
    _execute("nearby", **kwargs)
