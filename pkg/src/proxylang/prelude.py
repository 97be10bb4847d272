"""Access to the bundled prelude source."""

from importlib import resources


def default_prelude_source() -> str:
    return resources.files(__package__).joinpath("prelude.plx") \
        .read_text(encoding="utf-8")
