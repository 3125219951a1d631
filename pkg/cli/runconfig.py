# cli/runconfig.py
"""
RunConfig: everything one management command invocation needs, built from
the parsed options with settings as defaults.

Generator specs use the mini-language `name:arg,arg`, e.g. `nevo:3,3`,
`simplex-boundary:4`, `random:8,2,0.4,42`.
"""

import inspect
import logging
from dataclasses import dataclass

from core.conf import toolkit_setting
from core.exceptions import BadParameters, ParseError
from complexes.facet_io import read_facet_file
from complexes.generators import GENERATORS
from complexes.simplicial import drop_ghosts
from homology.chains import FieldSpec

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("text", "json")

# argument positions that may be non-integral
REAL_ARGUMENTS = {"random": (2,)}


def _number(token):
    token = token.strip()
    try:
        return int(token)
    except ValueError:
        pass
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"generator argument '{token}' is not a number") from None


def parse_generator_spec(text):
    """'nevo:3,3' -> ('nevo', [3, 3])"""
    name, _, args = str(text).partition(":")
    name = name.strip()
    if name not in GENERATORS:
        known = ", ".join(sorted(GENERATORS))
        raise ParseError(f"unknown generator '{name}' (known: {known})")
    arguments = [_number(token) for token in args.split(",")] if args.strip() else []
    return name, arguments


def build_from_spec(text, seed=None):
    name, arguments = parse_generator_spec(text)
    if name == "random" and len(arguments) == 3:
        arguments.append(seed if seed is not None else 0)
    generator = GENERATORS[name]
    try:
        inspect.signature(generator).bind(*arguments)
    except TypeError:
        raise ParseError(f"wrong number of arguments for generator '{name}'") from None
    real = REAL_ARGUMENTS.get(name, ())
    for position, value in enumerate(arguments):
        if position not in real and not isinstance(value, int):
            raise ParseError(f"generator '{name}' expected integer argument {position + 1}, got {value}")
    return generator(*arguments)


@dataclass(frozen=True)
class RunConfig:
    command: str
    input_path: str = None
    generator: str = None
    primes: tuple = (2, 3)
    cap: int = 22
    jobs: int = 1
    seed: int = None
    output_format: str = "text"
    output_path: str = None
    force: bool = False
    strict: bool = True
    include_timings: bool = False

    @classmethod
    def from_options(cls, command, options):
        primes = options.get("primes")
        primes = tuple(f.p for f in FieldSpec.parse_list(primes)) if primes \
            else tuple(toolkit_setting('TOOLKIT_FIELD_PRIMES'))
        config = cls(
            command=command,
            input_path=options.get("input"),
            generator=options.get("generate"),
            primes=primes,
            cap=toolkit_setting('TOOLKIT_ENUMERATION_CAP', options.get("cap")),
            jobs=toolkit_setting('TOOLKIT_JOBS', options.get("jobs")),
            seed=options.get("seed"),
            output_format=options.get("format") or "text",
            output_path=options.get("output"),
            force=bool(options.get("force")),
            strict=not options.get("lenient"),
            include_timings=bool(options.get("timings")),
        )
        config.validate()
        return config

    def validate(self):
        hard_cap = toolkit_setting('TOOLKIT_HARD_CAP')
        if self.cap > hard_cap:
            raise BadParameters(f"enumeration cap {self.cap} exceeds the hard ceiling {hard_cap}")
        if self.jobs < 1:
            raise BadParameters(f"job count must be positive, got {self.jobs}")
        if self.output_format not in OUTPUT_FORMATS:
            raise BadParameters(f"unknown output format '{self.output_format}'")
        for p in self.primes:
            FieldSpec(p)

    @property
    def fields(self):
        return [FieldSpec(p) for p in self.primes]

    def load_complex(self):
        """The input complex; ghost vertices are renumbered away in lenient mode"""
        if self.input_path and self.generator:
            raise BadParameters("give either an input file or --generate, not both")
        if self.input_path:
            complex_ = read_facet_file(self.input_path, strict=self.strict)
        elif self.generator:
            complex_ = build_from_spec(self.generator, self.seed)
        else:
            raise BadParameters("no input: give a facet file or --generate name:args")
        if complex_.ghosts:
            logger.warning("Renumbering %s to drop ghost vertices %s", complex_, complex_.ghosts)
            complex_ = drop_ghosts(complex_)
        return complex_
