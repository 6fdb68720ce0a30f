"""Experiment configuration read from INI files.

    [run]
    seed = 20060130
    output_dir = results

    [quadrature]
    method = product-rule
    radial_order = 24

    [params]
    p = 1, 2
    q = 2
    alpha = 0

    [family]
    z = poly n=1 {(1):1}

Comma lists in ``[params]`` and every ``[params.<name>]`` block expand to
their Cartesian product.
"""
import itertools
import logging
import os
import re
from configparser import ConfigParser, Error as ConfigParserError
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Literal, Optional, Sequence, Tuple

from .. import __version__
from ..core.errors import ConfigError, DescriptorError, ParameterError
from ..core.holo_base import HoloFunction
from ..core.params import QuadratureSpec, WeightParams
from ..functions.descriptor import parse_function

logger = logging.getLogger(__name__)

COMMANDS = ("compare", "theorem1", "kernel-check", "operator-probe", "sharpness", "lemma-checks",
            "quadrature-bench")
OUTPUT_ENV = "BERGMAN_OUTPUT_DIR"
PARAM_KEYS = ("p", "q", "alpha", "n")

STANDARD_FAMILY = {
    1: (
        ("one", "poly n=1 {(0):1}"),
        ("z", "poly n=1 {(1):1}"),
        ("z^2", "poly n=1 {(2):1}"),
        ("1+z", "poly n=1 {(0):1, (1):1}"),
        ("z-1/2", "poly n=1 {(0):-0.5, (1):1}"),
        ("kernel", "kernel n=1 a=(0.5) s=2"),
    ),
    2: (
        ("one", "poly n=2 {(0,0):1}"),
        ("z1", "poly n=2 {(1,0):1}"),
        ("z1z2", "poly n=2 {(1,1):1}"),
        ("z1^2+z2", "poly n=2 {(2,0):1, (0,1):1}"),
        ("kernel", "kernel n=2 a=(0.3,0.2) s=3"),
    ),
}

_SECTION_LINE = re.compile(r"\s*\[([^\]]+)\]")
_OPTION_LINE = re.compile(r"\s*([^=:\s][^=:]*?)\s*[=:]\s*")


class _Locator:
    """Line and column of each option's value in the source text."""

    def __init__(self, text: str):
        self.positions: Dict[Tuple[str, str], Tuple[int, int]] = {}
        section = None
        for number, line in enumerate(text.splitlines(), start=1):
            if line.lstrip().startswith(("#", ";")) or not line.strip():
                continue
            header = _SECTION_LINE.match(line)
            if header:
                section = header.group(1).strip()
                continue
            option = _OPTION_LINE.match(line)
            if option and section is not None:
                self.positions[(section, option.group(1).strip().lower())] = (number, option.end() + 1)

    def __call__(self, section: str, key: str) -> Tuple[Optional[int], Optional[int]]:
        return self.positions.get((section, key), (None, None))


@dataclass
class Section:
    """Typed access to one config section; errors carry the value's location."""

    name: str
    values: Dict[str, str]
    locate: _Locator

    def error(self, key: str, message: str) -> ConfigError:
        line, column = self.locate(self.name, key)
        return ConfigError(f"[{self.name}] {key}: {message}", line, column)

    def _convert(self, key, raw, kind):
        try:
            return kind(raw.strip())
        except ValueError:
            raise self.error(key, f"expected {kind.__name__}, got {raw.strip()!r}")

    def get_float(self, key: str, default: Optional[float] = None) -> float:
        if key not in self.values:
            if default is None:
                raise self.error(key, "missing")
            return default
        return self._convert(key, self.values[key], float)

    def get_int(self, key: str, default: Optional[int] = None) -> int:
        if key not in self.values:
            if default is None:
                raise self.error(key, "missing")
            return default
        return self._convert(key, self.values[key], int)

    def get_floats(self, key: str, default: Sequence[float] = ()) -> List[float]:
        if key not in self.values:
            return list(default)
        items = [item for item in self.values[key].split(",") if item.strip()]
        if not items:
            raise self.error(key, "empty list")
        return [self._convert(key, item, float) for item in items]

    def get_ints(self, key: str, default: Sequence[int] = ()) -> List[int]:
        if key not in self.values:
            return list(default)
        return [self._convert(key, item, int) for item in self.values[key].split(",") if item.strip()]

    def get_str(self, key: str, default: str = "") -> str:
        return self.values.get(key, default).strip()


@dataclass
class ExperimentConfig:
    command: str = "compare"
    params: List[WeightParams] = field(default_factory=lambda: [WeightParams(2.0, 2.0)])
    family: List[Tuple[str, HoloFunction]] = field(default_factory=list)
    spec: QuadratureSpec = field(default_factory=QuadratureSpec)
    output_dir: Path = Path("results")
    golden_dir: Path = Path("goldens")
    golden_mode: Optional[Literal["record", "verify"]] = None
    sections: Dict[str, Section] = field(default_factory=dict)
    source: Optional[Path] = None

    def section(self, name: str) -> Section:
        return self.sections.get(name) or Section(name, {}, _Locator(""))

    def family_for(self, n: int) -> List[Tuple[str, HoloFunction]]:
        """Configured functions of n variables, or the standard family when none are configured."""
        chosen = [(label, f) for label, f in self.family if f.n == n]
        if chosen or self.family:
            return chosen
        return [(label, parse_function(text)) for label, text in STANDARD_FAMILY.get(n, ())]

    def echo(self) -> List[Tuple[str, str]]:
        """Key-value lines describing the run; the seed is always present."""
        items = [("version", __version__), ("command", self.command)]
        if self.source is not None:
            items.append(("config", self.source.name))
        items += [(f"quadrature.{key}", value) for key, value in self.spec.to_mapping().items()]
        for index, params in enumerate(self.params):
            items.append((f"params.{index}", f"p={params.p!r} q={params.q!r} alpha={params.alpha!r} n={params.n}"))
        items += [(f"family.{label}", f.describe()) for label, f in self.family]
        for name in sorted(self.sections):
            if name in ("run", "quadrature", "family") or name.startswith("params"):
                continue
            items += [(f"{name}.{key}", value.strip()) for key, value in sorted(self.sections[name].values.items())]
        return items


def _expand_params(section: Section) -> List[WeightParams]:
    unknown = set(section.values) - set(PARAM_KEYS)
    if unknown:
        raise section.error(sorted(unknown)[0], "unknown parameter")
    grid = [
        section.get_floats("p", [2.0]),
        section.get_floats("q", [2.0]),
        section.get_floats("alpha", [0.0]),
        section.get_ints("n", [1]),
    ]
    out = []
    for p, q, alpha, n in itertools.product(*grid):
        try:
            out.append(WeightParams(p, q, alpha, n))
        except ParameterError as e:
            raise section.error("p", str(e))
    return out


def _read_family(section: Section) -> List[Tuple[str, HoloFunction]]:
    family = []
    for label, text in section.values.items():
        try:
            family.append((label, parse_function(text.strip())))
        except DescriptorError as e:
            line, column = section.locate(section.name, label)
            lead = len(text) - len(text.lstrip())
            column = None if column is None else column + lead + e.position
            raise ConfigError(f"[family] {label}: {e}", line, column) from e
    return family


def _parse_text(text: str, name: str) -> ConfigParser:
    parser = ConfigParser(interpolation=None, inline_comment_prefixes=("#", ";"))
    parser.optionxform = str.lower
    try:
        parser.read_string(text, source=name)
    except ConfigParserError as e:
        line = getattr(e, "lineno", None)
        if line is None and getattr(e, "errors", None):
            line = e.errors[0][0]
        raise ConfigError(f"Cannot parse {name}: {e.message.splitlines()[0]}", line) from e
    for section in parser.sections():
        if section not in ("run", "quadrature", "params", "family", "sharpness", "probe", "lemmas",
                           "kernel", "bench") and not section.startswith("params."):
            line = next((i for i, l in enumerate(text.splitlines(), 1) if l.strip() == f"[{section}]"), None)
            raise ConfigError(f"Unknown section [{section}]", line, 1)
    return parser


def load_config(path: Optional[Path] = None, command: Optional[str] = None, seed: Optional[int] = None,
                output_dir: Optional[str] = None, golden_mode: Optional[str] = None) -> ExperimentConfig:
    """Read ``path`` (or start from defaults) and apply command-line and environment overrides."""
    text = ""
    if path is not None:
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except OSError as e:
            raise ConfigError(f"Cannot read config {path}: {e.strerror}") from e
    parser = _parse_text(text, str(path or "<defaults>"))
    locate = _Locator(text)
    sections = {name: Section(name, dict(parser[name]), locate) for name in parser.sections()}
    run = sections.get("run") or Section("run", {}, locate)

    config = ExperimentConfig(source=path, sections=sections)
    config.command = command or run.get_str("command", "compare")
    if config.command not in COMMANDS:
        raise run.error("command", f"unknown command {config.command!r}")

    if "quadrature" in sections:
        quadrature = sections["quadrature"]
        try:
            config.spec = QuadratureSpec.from_mapping(quadrature.values)
        except ParameterError as e:
            key = next((k for k in quadrature.values if repr(k) in str(e) or k in str(e)), None)
            raise quadrature.error(key or "method", str(e)) from e
    run_seed = run.get_int("seed", config.spec.seed)
    config.spec = config.spec.replace(seed=seed if seed is not None else run_seed)

    blocks = [sections[name] for name in parser.sections() if name == "params" or name.startswith("params.")]
    if blocks:
        config.params = [params for block in blocks for params in _expand_params(block)]
    if not config.params:
        raise ConfigError("Parameter grid is empty")
    if "family" in sections:
        config.family = _read_family(sections["family"])

    config.output_dir = Path(output_dir or os.environ.get(OUTPUT_ENV) or run.get_str("output_dir", "results"))
    config.golden_dir = Path(run.get_str("golden_dir", "goldens"))
    mode = golden_mode or run.get_str("golden_mode") or None
    if mode not in (None, "record", "verify"):
        raise run.error("golden_mode", f"expected record or verify, got {mode!r}")
    config.golden_mode = mode
    logger.debug("loaded config %s for %s with %d parameter sets", path, config.command, len(config.params))
    return config
