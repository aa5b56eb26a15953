from pydantic import BaseModel, ConfigDict, Field


class GeneratorParams(BaseModel):
    """Parameters of the seeded random instance generator.

    Same seed and parameters always give the same instance.
    """

    model_config = ConfigDict(frozen=True)

    seed: int = Field(..., ge=0, lt=2**64)
    atom_count: int = Field(3, ge=0, le=6)
    label_count: int = Field(2, ge=0, le=4)
    edge_density: float = Field(0.5, ge=0.0, le=1.0)
    ideal_slack: float = Field(
        0.0, ge=0.0, le=1.0, description="Probability of enlarging C_α beyond R_α per atom"
    )
    j_shrink: float = Field(
        0.0, ge=0.0, le=1.0, description="Probability of dropping a regular atom from J"
    )
