import json
from pathlib import Path

from pydantic import ValidationError

from pascaldet.errors import SpecError
from pascaldet.matrices import FAMILY_ADAPTER
from pascaldet.sequences import SEQUENCE_ADAPTER

MAX_FILE_SIZE_MB = 1
SPEC_EXTENSIONS = (".json",)


class SpecLoader:
    """
    Handles:
    - Spec file validation
    - Loading a spec from a path or inline JSON
    - Validating it into MatrixSpec / BandedPeriodicSpec / SequenceSpec models
    """

    @staticmethod
    def validate_file(path: Path):
        # --- File existence ---
        if not path.is_file():
            raise SpecError(f"Spec file not found: {path}")

        # --- File size validation ---
        size_in_mb = path.stat().st_size / (1024 * 1024)
        if size_in_mb > MAX_FILE_SIZE_MB:
            raise SpecError(f"Spec file too large. Maximum allowed size is {MAX_FILE_SIZE_MB}MB.")

        # --- File type validation ---
        if path.suffix.lower() not in SPEC_EXTENSIONS:
            raise SpecError("Unsupported spec format. Please provide a .json file.")

    @staticmethod
    def load_document(source: str):
        """Inline JSON when ``source`` starts with '{' or '[', a file path otherwise."""
        text = source.strip()
        if text.startswith(("{", "[")):
            origin = "inline spec"
        else:
            path = Path(source)
            SpecLoader.validate_file(path)
            try:
                text = path.read_text(encoding="utf-8")
            except OSError as exc:
                raise SpecError(f"Could not read spec file {path}: {exc}") from exc
            origin = str(path)
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise SpecError(f"Could not parse {origin} as JSON: {exc.msg} (line {exc.lineno})") from exc

    @staticmethod
    def parse_family(document):
        try:
            return FAMILY_ADAPTER.validate_python(document)
        except ValidationError as exc:
            raise SpecError(f"Invalid matrix spec: {_summarize(exc)}") from exc

    @staticmethod
    def parse_sequence(document):
        try:
            return SEQUENCE_ADAPTER.validate_python(document)
        except ValidationError as exc:
            raise SpecError(f"Invalid sequence spec: {_summarize(exc)}") from exc

    @staticmethod
    def parse_params(source: str) -> dict:
        # --- Params are always a JSON object ---
        document = SpecLoader.load_document(source)
        if not isinstance(document, dict):
            raise SpecError("Parameters must be a JSON object.")
        return document


def _summarize(exc: ValidationError) -> str:
    parts = []
    for error in exc.errors():
        location = ".".join(str(part) for part in error["loc"]) or "<root>"
        parts.append(f"{location}: {error['msg']}")
    return "; ".join(parts)


def load_family(source: str):
    return SpecLoader.parse_family(SpecLoader.load_document(source))


def load_sequence(source: str):
    return SpecLoader.parse_sequence(SpecLoader.load_document(source))
