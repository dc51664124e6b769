from pydantic import BaseModel, ConfigDict, Field

from majca.core.automaton import Configuration


class CanonicalForm(BaseModel):
    model_config = ConfigDict(frozen=True)

    representative: Configuration
    symmetry_class_size: int = Field(ge=1)


def symmetry_orbit(cfg: Configuration) -> set[Configuration]:
    """Images of cfg under every rotation, optionally mirrored and complemented."""
    orbit: set[Configuration] = set()
    for base in (cfg, cfg.mirror()):
        for image in (base, base.complement()):
            for k in range(cfg.n):
                orbit.add(image.rotate(k))
    return orbit


def canonicalize(cfg: Configuration) -> CanonicalForm:
    # text order and packed order agree for a fixed ring size
    orbit = symmetry_orbit(cfg)
    return CanonicalForm(
        representative=min(orbit, key=lambda image: image.bits),
        symmetry_class_size=len(orbit),
    )
