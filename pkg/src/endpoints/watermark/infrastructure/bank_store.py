"""
JSON persistence for watermark banks.

A stored bank carries its config echo and hash so that a bank can only be
loaded back against the config that produced it.
"""

from pathlib import Path
from typing import Any

from src.endpoints.watermark.domain.models import WatermarkBank, WatermarkConfig
from src.shared.exceptions import ConfigurationError
from src.shared.infrastructure.audio_files import PathLike, read_json, write_json
from src.shared.infrastructure.logger import get_logger

logger = get_logger(__name__)

SCHEMA_VERSION = 1


class BankStore:
    """
    Reads and writes bank documents.

    Document layout:
        schema_version, config (echo), config_hash,
        vectors (N_s lists of D floats), signs (N_r lists of N_s ints).
    """

    def to_document(
        self, bank: WatermarkBank, config: WatermarkConfig
    ) -> dict[str, Any]:
        """
        Serialize a bank.

        Args:
            bank: Bank to store.
            config: Config the bank was generated for.

        Returns:
            JSON-serializable document.
        """
        return {
            "schema_version": SCHEMA_VERSION,
            "config": config.describe(),
            "config_hash": bank.config_hash,
            "vectors": bank.vectors.tolist(),
            "signs": bank.signs.astype(int).tolist(),
        }

    def save(
        self, path: PathLike, bank: WatermarkBank, config: WatermarkConfig
    ) -> Path:
        """Write the bank document atomically."""
        written = write_json(path, self.to_document(bank, config))
        logger.info(f"Wrote bank {bank!r} to {written}")
        return written

    def load(self, path: PathLike, config: WatermarkConfig) -> WatermarkBank:
        """
        Read a bank document and bind it to config.

        Args:
            path: Bank JSON path.
            config: Config the bank must belong to.

        Returns:
            The stored bank.

        Raises:
            AudioIOError: If the file cannot be read.
            ConfigurationError: On a schema version, layout or hash mismatch.
        """
        document = read_json(path)
        version = document.get("schema_version") if isinstance(document, dict) else None
        if version != SCHEMA_VERSION:
            raise ConfigurationError(
                f"{path} is not a version {SCHEMA_VERSION} bank document"
            )
        try:
            bank = WatermarkBank(
                document["vectors"], document["signs"], str(document["config_hash"])
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"Malformed bank document {path}: {exc}") from exc
        if bank.config_hash != config.config_hash:
            raise ConfigurationError(
                f"Bank {path} was generated for a different config"
            )
        return bank
