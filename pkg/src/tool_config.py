"""
Tool config: the declarative file behind every subcommand.

Composes the endpoint schemas into one versioned JSON document. CLI
flags override file values; the effective config is echoed into every
summary with secrets replaced by fingerprints.
"""

from pathlib import Path
from typing import Any, Literal, Optional

from pydantic import BaseModel, ConfigDict, Field

from src.endpoints.channel.domain.models import ChannelSpec
from src.endpoints.channel.presentation.schemas import ChannelSchema
from src.endpoints.detector.domain.models import DecoderParams
from src.endpoints.detector.presentation.schemas import DecoderSchema
from src.endpoints.watermark.application.generate_bank import GenerateBank
from src.endpoints.watermark.domain.models import (
    EmbedPlacement,
    WatermarkBank,
    WatermarkConfig,
)
from src.endpoints.watermark.infrastructure.bank_store import BankStore
from src.endpoints.watermark.presentation.schemas import (
    PlacementSchema,
    WatermarkSchema,
)
from src.shared.exceptions import ConfigurationError
from src.shared.infrastructure.audio_files import read_json
from src.shared.infrastructure.logger import get_logger
from src.shared.infrastructure.settings import get_settings

logger = get_logger(__name__)


class IOSchema(BaseModel):
    """
    File options.

    Attributes:
        bank: Stored bank JSON to use instead of regenerating it.
        bit_depth: PCM bit depth of written WAV files.
    """

    model_config = ConfigDict(extra="forbid")

    bank: Optional[Path] = Field(None, description="Stored bank JSON")
    bit_depth: Literal[16, 24] = Field(16, description="Output PCM bit depth")


class ToolConfig(BaseModel):
    """
    Tool config.

    Attributes:
        schema_version: Always 1.
        watermark: Watermark section (needed by embed, detect and bank).
        decoder: Decoder section.
        placement: Placement section.
        channel: Channel section (used by attack).
        io: File options.
    """

    model_config = ConfigDict(extra="forbid")

    schema_version: Literal[1] = Field(1, description="Config schema version")
    watermark: Optional[WatermarkSchema] = Field(None, description="Watermark section")
    decoder: DecoderSchema = Field(default_factory=DecoderSchema)
    placement: PlacementSchema = Field(default_factory=PlacementSchema)
    channel: Optional[ChannelSchema] = Field(None, description="Channel section")
    io: IOSchema = Field(default_factory=IOSchema)

    def watermark_config(self) -> WatermarkConfig:
        """
        The watermark config.

        Raises:
            ConfigurationError: If the watermark section is missing.
        """
        if self.watermark is None:
            raise ConfigurationError(
                "No watermark section: pass --key or a config with a watermark section"
            )
        return self.watermark.to_domain()

    def bank_for(self, config: WatermarkConfig) -> WatermarkBank:
        """The stored bank when io.bank is set, else a freshly generated one."""
        if self.io.bank is not None:
            return BankStore().load(self.io.bank, config)
        return GenerateBank().execute(config)

    def decoder_params(self) -> DecoderParams:
        """The decoder parameters."""
        return self.decoder.to_domain()

    def embed_placement(self) -> EmbedPlacement:
        """The insertion placement."""
        return self.placement.to_domain()

    def channel_spec(self) -> ChannelSpec:
        """The channel (identity when the section is missing)."""
        if self.channel is None:
            return ChannelSpec.identity()
        return self.channel.to_domain()

    def echo(self) -> dict[str, Any]:
        """Effective config as JSON, passphrases replaced by fingerprints."""
        document = self.model_dump(mode="json")
        if self.watermark is not None:
            document["watermark"] = self.watermark.echo()
        return document


def load_tool_config(path: Optional[Path]) -> ToolConfig:
    """
    Load the tool config.

    Falls back to EIGENMARK_CONFIG when path is None, and to an empty
    config (defaults only) when neither is set.

    Args:
        path: Config file from --config.

    Returns:
        Validated ToolConfig.

    Raises:
        AudioIOError: If the file cannot be read.
        pydantic.ValidationError: If the document is invalid.
    """
    path = path or get_settings().config
    if path is None:
        return ToolConfig()
    logger.debug(f"Loading tool config {path}")
    return ToolConfig.model_validate(read_json(path))


def with_overrides(
    tool: ToolConfig, overrides: dict[str, dict[str, Any]]
) -> ToolConfig:
    """
    Apply CLI flag values on top of a config.

    Args:
        tool: Config from file.
        overrides: Section name to {field: value}; None values are ignored.

    Returns:
        Re-validated config.
    """
    document = tool.model_dump(exclude_unset=True)
    for section, values in overrides.items():
        given = {name: value for name, value in values.items() if value is not None}
        if given:
            merged = dict(document.get(section) or {})
            merged.update(given)
            document[section] = merged
    return ToolConfig.model_validate(document)
