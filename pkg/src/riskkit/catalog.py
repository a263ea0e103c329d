"""Risk taxonomy for component-based (COTS) software projects.

The built-in catalog tags each of its 61 risks with one of the four RUP
lifecycle phases (inception, elaboration, construction, transition) and
carries the per-phase priority weights the scoring engine applies. Catalog
values are immutable; custom catalogs load from a JSON document with the
same shape ``serialize_catalog`` produces.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from ._sources import TextSource, read_text
from .errors import ParseError, ValidationError


class Phase(str, Enum):
    """The four RUP lifecycle phases, in lifecycle order."""

    INCEPTION = "inception"
    ELABORATION = "elaboration"
    CONSTRUCTION = "construction"
    TRANSITION = "transition"

    @property
    def order(self) -> int:
        """Position in the lifecycle, 0-based."""
        return _PHASE_ORDER[self]

    @property
    def initial(self) -> str:
        """Single-letter prefix used in qualified risk ids (I/E/C/T)."""
        return self.value[0].upper()


_PHASE_ORDER = {phase: index for index, phase in enumerate(Phase)}


class RiskRef(NamedTuple):
    """Identifies one risk: codes repeat across phases, so both parts matter."""

    phase: Phase
    code: str

    @property
    def qualified(self) -> str:
        """Unambiguous id like ``E-EF`` (phase initial + code)."""
        return f"{self.phase.initial}-{self.code}"


@dataclass(frozen=True)
class RatingScale:
    """Bounds of the survey rating instrument plus its declared ideal rank."""

    min: float
    max: float
    ideal_rank: float

    def __post_init__(self) -> None:
        if not self.min < self.max:
            raise ValidationError(f"rating scale needs min < max, got [{self.min}, {self.max}]")
        if not self.min <= self.ideal_rank <= self.max:
            raise ValidationError(
                f"ideal rank {self.ideal_rank} outside scale [{self.min}, {self.max}]"
            )


@dataclass(frozen=True)
class PhaseSpec:
    phase: Phase
    priority: float
    display_name: str


@dataclass(frozen=True)
class RiskItem:
    code: str
    phase: Phase
    description: str
    source_note: str | None = None

    @property
    def ref(self) -> RiskRef:
        return RiskRef(self.phase, self.code)


@dataclass(frozen=True)
class RiskCatalog:
    """Phase specs plus risk items, in canonical (phase-grouped) order."""

    phases: tuple[PhaseSpec, ...]
    risks: tuple[RiskItem, ...]
    scale: RatingScale

    def phase_spec(self, phase: Phase) -> PhaseSpec | None:
        for spec in self.phases:
            if spec.phase is phase:
                return spec
        return None

    def priority(self, phase: Phase) -> float:
        spec = self.phase_spec(phase)
        if spec is None:
            raise ValidationError(f"phase {phase.value} is not declared in the catalog")
        return spec.priority

    def refs(self) -> tuple[RiskRef, ...]:
        return tuple(item.ref for item in self.risks)

    def item(self, ref: RiskRef) -> RiskItem | None:
        for candidate in self.risks:
            if candidate.ref == ref:
                return candidate
        return None

    def __contains__(self, ref: object) -> bool:
        return isinstance(ref, tuple) and any(item.ref == tuple(ref) for item in self.risks)


# --------------------------------------------------------------------------
# Built-in taxonomy. Order is canonical: it fixes serialization, rendering,
# and fixture row order. Codes repeat across phases (EF appears in both
# elaboration and transition); (phase, code) is the unique key.

DEFAULT_SCALE = RatingScale(min=1.0, max=6.0, ideal_rank=3.5)

_PHASES = (
    (Phase.INCEPTION, 7.0, "Inception"),
    (Phase.ELABORATION, 5.0, "Elaboration"),
    (Phase.CONSTRUCTION, 3.0, "Construction"),
    (Phase.TRANSITION, 2.0, "Transition"),
)

_INCEPTION = (
    ("A", "When the COTS Component and the requirement suggested by the user does not matches"),
    ("B", "Requirements of the users changes frequently"),
    ("C", "Budgets and schedules are not realistic"),
    ("D", "Unclear requirements specification"),
    ("E", "Lack of accuracy in schedule"),
    ("F", "Lack of reliable and suitable licensing contracts that encompass the appropriate "
          "documentation and responsibility of the vendor and developer in case of failure"),
    ("G", "Rigidity in time constraints of schedule generates inflexibility"),
    ("H", "Market survey is not done properly than appropriate components that can map with "
          "user requirements cannot be found"),
    ("I", "Lack of contingency planning"),
    ("J", "Rapid requirement change of the user"),
    ("K", "Component search suffers from appropriate fetching and classification mechanism "
          "provided by the marketers"),
    ("L", "Architectural prototype not defined properly"),
    ("M", "Latest technologies and fresh arrived COTS product are not analyzed or lack of "
          "market survey"),
    ("N", "Vendors incapability to delivers mind blowing demos and specifications of the "
          "COTS product"),
    ("O", "Architecture was not analyzed during the component selection process"),
    ("P", "Cumbersome and complicated requirements"),
    ("Q", "Lack of vendor support"),
    ("R", "Missing authenticity of the components due to the lack of certified components"),
    ("S", "Unavailability of the source code leads to judging nature and the behavior of "
          "the components"),
    ("T", "Inappropriate domain knowledge of developer"),
    ("U", "Higher complexity of components architecture and the connectors introduces the "
          "chances of risk"),
)

_ELABORATION = (
    ("V", "Mismatch between connectors and message protocols"),
    ("W", "Interface specification of the components is not clear or not specified properly"),
    ("X", "Incompatible or mismatch interfaces may obstruct the data communication between "
          "the components which wants to exchange data"),
    ("Y", "Use of the software model that does not support component based software "
          "development process"),
    ("Z", "Prerequisite quality is not met due to the lack of market survey that has to be "
          "done to know the requirement"),
    ("AB", "False assumption of the internal structure and internal specification made by "
           "the COTS component about each other"),
    ("CD", "Lack of resilient architecture"),
    ("EF", "Existence of the loop holes in the architecture review process"),
    ("GH", "Components are not platform independent"),
    ("IJ", "Lack of executable architectural prototype"),
    ("KL", "Mismatch occurrence between planned expenses and actual expenses"),
    ("MN", "Security aspects are not considered and the vulnerability of the components is "
           "very high"),
    ("OP", "Prototypes that demonstrably mitigate each identified technical risk are not "
           "defined"),
    ("QR", "Components are not interoperable with each other due to missing well defined "
           "interfaces"),
    ("UV", "Lack of software architecture document that is extreme crucial in order to gain "
           "knowledge about the component"),
    ("WX", "Component architecture are not compatible with each other thus makes integration "
           "of the component tough"),
    ("YZ", "Component based software prototypes cannot be realized in early phases of the "
           "software cycle make architecture verification of the interfaces difficult"),
)

_CONSTRUCTION = (
    ("ABC", "Wrong interface construction may hinder the proper flow of the information or "
            "data between components"),
    ("DEF", "Development of the wrong functions at the time of coding leads to several "
            "exceptions"),
    ("GHI", "Lack of regular watch on the component based development process generate "
            "several problems"),
    ("JKL", "Lack of test suites and test cases that facilitates coordination among the "
            "component"),
    ("MNO", "Generation of incompatibility between user requirements stated earlier in the "
            "component and new versions developed"),
    ("PQR", "Staff persons indulge in integration process of the components are not "
            "technological sound"),
    ("STU", "Behavior of the components cannot be judged in component based development due "
            "to the absence of the availability of the code of the component"),
    ("VWX", "Lack of technology expertise and poor work knowledge and skills of assembler "
            "leads to poor component evaluation and integration"),
    ("YZA", "Missing compatibility between the different versions of the component based "
            "software"),
    ("ABCD", "Existence of poor or no documentation feature for the new versions"),
    ("EFGH", "If the stability is not incorporated in the component based system, poor "
             "stability control results"),
    ("IJKL", "Doing change in one component will make a heavy impact on the other component"),
    ("MNOP", "Unavailability of the competent staff"),
    ("QRST", "Unavailability of the internal structure of the component makes the testing "
             "process tough and unreliable"),
)

_TRANSITION = (
    ("AF", "End user training sessions are not conducted"),
    ("CF", "Component based software that is developed cannot accommodate changes preferred "
           "by the user"),
    ("BF", "Occurrence of incompatibility between the component based product being developed "
           "and the quality level that has been set during the initial phase of the software "
           "development cycle"),
    ("EF", "Complicated system manual results lack of understanding by the users"),
    ("GF", "Quality services after the COTS software installation at the user site are not "
           "given"),
    ("KF", "User is not facilitated with the upgraded copies of the component based software"),
    ("LF", "Updating or alteration of the component based system cannot be facilitated"),
    ("MF", "Lack of tracing of alternate component in case of failure"),
    ("TF", "Planning the maintenance is difficult as the components have asynchronous cycle"),
)

# Placement anomalies inherited from the source taxonomy, kept as data so the
# canonical ordering stays reproducible.
_SOURCE_NOTES = {
    (Phase.INCEPTION, "U"): (
        "Kept under inception per the canonical survey ordering although the wording "
        "concerns architecture complexity, an elaboration-stage topic."
    ),
    (Phase.ELABORATION, "Z"): (
        "Requirement-elicitation wording, but kept under elaboration per the canonical "
        "survey ordering."
    ),
}

_RISK_GROUPS = (
    (Phase.INCEPTION, _INCEPTION),
    (Phase.ELABORATION, _ELABORATION),
    (Phase.CONSTRUCTION, _CONSTRUCTION),
    (Phase.TRANSITION, _TRANSITION),
)


def builtin_catalog() -> RiskCatalog:
    """Return the built-in 61-item taxonomy with default priorities and scale."""
    risks = tuple(
        RiskItem(code, phase, description, _SOURCE_NOTES.get((phase, code)))
        for phase, group in _RISK_GROUPS
        for code, description in group
    )
    phases = tuple(PhaseSpec(phase, priority, name) for phase, priority, name in _PHASES)
    return RiskCatalog(phases=phases, risks=risks, scale=DEFAULT_SCALE)


def risks_by_phase(catalog: RiskCatalog, phase: Phase) -> tuple[RiskItem, ...]:
    """All risks of one phase, in catalog order."""
    return tuple(item for item in catalog.risks if item.phase is phase)


def validate_catalog(catalog: RiskCatalog) -> list[str]:
    """Check every catalog invariant; returns one message per violation."""
    violations: list[str] = []

    declared: dict[Phase, int] = {}
    for spec in catalog.phases:
        declared[spec.phase] = declared.get(spec.phase, 0) + 1
        if spec.priority <= 0:
            violations.append(f"phase {spec.phase.value}: priority must be positive, got {spec.priority}")
        if not spec.display_name:
            violations.append(f"phase {spec.phase.value}: blank display name")
    for phase in Phase:
        count = declared.get(phase, 0)
        if count == 0:
            violations.append(f"phase {phase.value}: missing phase declaration")
        elif count > 1:
            violations.append(f"phase {phase.value}: declared {count} times")

    seen: set[RiskRef] = set()
    for item in catalog.risks:
        label = item.ref.qualified
        if not item.code:
            violations.append("risk with empty code")
            continue
        if not item.description.strip():
            violations.append(f"risk {label}: blank description")
        if item.ref in seen:
            violations.append(f"risk {label}: duplicate (phase, code) pair")
        seen.add(item.ref)

    return violations


# --------------------------------------------------------------------------
# Catalog document (JSON). Top-level keys: phases, risks, scale.

def serialize_catalog(catalog: RiskCatalog) -> bytes:
    return (json.dumps(catalog_to_doc(catalog), indent=2) + "\n").encode("utf-8")


def catalog_to_doc(catalog: RiskCatalog) -> dict:
    risks = []
    for item in catalog.risks:
        entry: dict = {"code": item.code, "phase": item.phase.value, "description": item.description}
        if item.source_note is not None:
            entry["source_note"] = item.source_note
        risks.append(entry)
    return {
        "phases": [
            {"id": spec.phase.value, "priority": spec.priority, "display_name": spec.display_name}
            for spec in catalog.phases
        ],
        "risks": risks,
        "scale": {
            "min": catalog.scale.min,
            "max": catalog.scale.max,
            "ideal_rank": catalog.scale.ideal_rank,
        },
    }


def load_catalog(source: TextSource) -> RiskCatalog:
    """Parse and validate a catalog document.

    Raises ParseError for malformed documents (bad JSON, unknown keys, wrong
    types) and ValidationError when the parsed catalog breaks an invariant.
    """
    text = read_text(source)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"catalog document is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("catalog document must be a JSON object")
    _reject_unknown_keys(doc, {"phases", "risks", "scale"}, "catalog document")
    for key in ("phases", "risks", "scale"):
        if key not in doc:
            raise ParseError(f"catalog document: missing key '{key}'")

    phases = tuple(_parse_phase_spec(entry, n) for n, entry in enumerate(_as_list(doc["phases"], "phases"), 1))
    risks = tuple(_parse_risk(entry, n) for n, entry in enumerate(_as_list(doc["risks"], "risks"), 1))
    scale = _parse_scale(doc["scale"])

    catalog = RiskCatalog(phases=phases, risks=risks, scale=scale)
    violations = validate_catalog(catalog)
    if violations:
        raise ValidationError("invalid catalog:\n" + "\n".join(f"  - {v}" for v in violations))
    return catalog


def parse_phase(value: object, context: str) -> Phase:
    if not isinstance(value, str):
        raise ParseError(f"{context}: phase must be a string, got {value!r}")
    try:
        return Phase(value)
    except ValueError:
        raise ValidationError(
            f"{context}: unknown phase '{value}' (expected one of "
            f"{', '.join(p.value for p in Phase)})"
        ) from None


def _as_list(value: object, name: str) -> list:
    if not isinstance(value, list):
        raise ParseError(f"catalog document: '{name}' must be an array")
    return value


def _reject_unknown_keys(entry: dict, allowed: set[str], context: str) -> None:
    unknown = set(entry) - allowed
    if unknown:
        raise ParseError(f"{context}: unknown key(s) {sorted(unknown)}")


def _parse_phase_spec(entry: object, n: int) -> PhaseSpec:
    if not isinstance(entry, dict):
        raise ParseError(f"phases[{n}]: expected an object")
    _reject_unknown_keys(entry, {"id", "priority", "display_name"}, f"phases[{n}]")
    phase = parse_phase(entry.get("id"), f"phases[{n}]")
    priority = entry.get("priority")
    if not isinstance(priority, (int, float)) or isinstance(priority, bool):
        raise ParseError(f"phases[{n}]: priority must be a number")
    name = entry.get("display_name")
    if not isinstance(name, str):
        raise ParseError(f"phases[{n}]: display_name must be a string")
    return PhaseSpec(phase, float(priority), name)


def _parse_risk(entry: object, n: int) -> RiskItem:
    if not isinstance(entry, dict):
        raise ParseError(f"risks[{n}]: expected an object")
    _reject_unknown_keys(entry, {"code", "phase", "description", "source_note"}, f"risks[{n}]")
    code = entry.get("code")
    description = entry.get("description")
    if not isinstance(code, str) or not isinstance(description, str):
        raise ParseError(f"risks[{n}]: code and description must be strings")
    phase = parse_phase(entry.get("phase"), f"risks[{n}]")
    note = entry.get("source_note")
    if note is not None and not isinstance(note, str):
        raise ParseError(f"risks[{n}]: source_note must be a string")
    return RiskItem(code, phase, description, note)


def _parse_scale(entry: object) -> RatingScale:
    if not isinstance(entry, dict):
        raise ParseError("catalog document: 'scale' must be an object")
    _reject_unknown_keys(entry, {"min", "max", "ideal_rank"}, "scale")
    values = {}
    for key in ("min", "max", "ideal_rank"):
        value = entry.get(key)
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise ParseError(f"scale: '{key}' must be a number")
        values[key] = float(value)
    return RatingScale(**values)
