"""Scenario files: a flat INI dialect declaring complexes, isometries, tasks.

Grammar (documented in the README): sections are ``[scenario]``,
``[constants]``, ``[complex NAME]``, ``[isometry NAME]`` and ``[task NAME]``;
each holds ``key = value`` lines, ``#`` starts a comment. Tasks run in file
order and reference complexes and isometries by name.
"""

from __future__ import annotations

import configparser
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Tuple

from . import eplane, samples
from .complexes import FlagComplex, load_complex
from .errors import PreconditionViolated, ScenarioParseError
from .euclid import GoodnessConstants

TASK_KINDS = ("geodesic-pipeline", "goodness-sweep", "displacement-study",
              "contracting-suite", "extendability-study", "figure-render")


@dataclass
class ComplexSpec:
    name: str
    kind: str               # eplane | file | tree | sample
    params: Dict[str, str]

    def build(self, base_dir: Path) -> FlagComplex:
        if self.kind == "eplane":
            radius = int(self.params.get("radius", "8"))
            center = _parse_axial(self.params.get("center", "0 0"))
            return eplane.window(center, radius)
        if self.kind == "file":
            return load_complex(base_dir / self.params["path"])
        if self.kind == "tree":
            return samples.tree_with_branches(int(self.params.get("depth", "8")))
        if self.kind == "sample":
            return _sample_by_name(self.params["name"])
        raise ScenarioParseError(f"unknown complex kind {self.kind!r}")


def _sample_by_name(name: str) -> FlagComplex:
    builders = {
        "octahedron": samples.octahedron,
        "triangle": samples.single_triangle,
        "flat-disk-2": lambda: samples.flat_disk(2),
        "flat-disk-3": lambda: samples.flat_disk(3),
        "parallelogram": lambda: samples.parallelogram_disk(4, 2),
        "book-3": lambda: samples.book_window(3, 7),
        "book-4": lambda: samples.book_window(4, 7),
        "book-5": lambda: samples.book_window(5, 7),
    }
    if name not in builders:
        raise ScenarioParseError(f"unknown sample complex {name!r}")
    return builders[name]()


@dataclass
class TaskSpec:
    name: str
    kind: str
    params: Dict[str, str]


@dataclass
class Scenario:
    name: str
    seed: int
    constants: GoodnessConstants
    complexes: Dict[str, ComplexSpec]
    isometries: Dict[str, eplane.PlaneIsometry]
    tasks: List[TaskSpec]
    base_dir: Path = field(default_factory=Path)

    def complex(self, name: str) -> FlagComplex:
        if name not in self.complexes:
            raise ScenarioParseError(f"task references unknown complex {name!r}")
        return self.complexes[name].build(self.base_dir)

    def isometry(self, name: str) -> eplane.PlaneIsometry:
        if name not in self.isometries:
            raise ScenarioParseError(f"task references unknown isometry {name!r}")
        return self.isometries[name]


def _parse_axial(text: str) -> Tuple[int, int]:
    parts = text.replace(",", " ").split()
    if len(parts) != 2:
        raise ScenarioParseError(f"expected two integers, got {text!r}")
    return (int(parts[0]), int(parts[1]))


def parse_scenario_text(text: str, base_dir: Path = Path(".")) -> Scenario:
    parser = configparser.ConfigParser(delimiters=("=",), comment_prefixes=("#",),
                                       interpolation=None)
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ScenarioParseError(f"cannot parse scenario: {exc}") from exc

    name = "unnamed"
    seed = 0
    constants_kwargs: Dict = {}
    complexes: Dict[str, ComplexSpec] = {}
    isometries: Dict[str, eplane.PlaneIsometry] = {}
    tasks: List[TaskSpec] = []

    for section in parser.sections():
        items = dict(parser.items(section))
        words = section.split()
        head = words[0]
        if head == "scenario":
            name = items.get("name", name)
            seed = int(items.get("seed", "0"))
        elif head == "constants":
            if "C" in items:
                constants_kwargs["C"] = int(items["C"])
            if "D" in items:
                constants_kwargs["D"] = int(items["D"])
            if items.get("empirical", "false").lower() in ("1", "true", "yes"):
                constants_kwargs["empirical"] = True
        elif head == "complex":
            if len(words) != 2:
                raise ScenarioParseError(f"bad section [{section}]")
            kind = items.pop("kind", None)
            if kind is None:
                raise ScenarioParseError(f"complex {words[1]!r} has no kind")
            complexes[words[1]] = ComplexSpec(words[1], kind, items)
        elif head == "isometry":
            if len(words) != 2 or "map" not in items:
                raise ScenarioParseError(f"bad section [{section}]")
            isometries[words[1]] = eplane.parse_isometry(items["map"])
        elif head == "task":
            if len(words) != 2:
                raise ScenarioParseError(f"bad section [{section}]")
            kind = items.pop("kind", None)
            if kind not in TASK_KINDS:
                raise ScenarioParseError(
                    f"task {words[1]!r} has unknown kind {kind!r}")
            tasks.append(TaskSpec(words[1], kind, items))
        else:
            raise ScenarioParseError(f"unknown section [{section}]")

    try:
        constants = GoodnessConstants(**constants_kwargs)
    except PreconditionViolated as exc:
        raise ScenarioParseError(str(exc)) from exc
    scenario = Scenario(name, seed, constants, complexes, isometries, tasks, base_dir)
    _validate_references(scenario)
    return scenario


def _validate_references(scenario: Scenario):
    for task in scenario.tasks:
        cname = task.params.get("complex")
        if cname is not None and cname not in scenario.complexes:
            raise ScenarioParseError(
                f"task {task.name!r} references unknown complex {cname!r}")
        iname = task.params.get("isometry")
        if iname is not None and iname not in scenario.isometries:
            raise ScenarioParseError(
                f"task {task.name!r} references unknown isometry {iname!r}")


def load_scenario(path) -> Scenario:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ScenarioParseError(f"cannot read {path}: {exc}") from exc
    return parse_scenario_text(text, base_dir=path.parent)


def parse_fraction_list(text: str) -> List[Fraction]:
    return [Fraction(tok) for tok in text.replace(",", " ").split()]
