"""Run settings merged from the environment and the global flags."""

from __future__ import annotations

import os
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from totguild.logs import parse_log_level


class RunConfig(BaseModel):
    model_config = ConfigDict(extra="forbid")

    log_level: str = "INFO"
    log_file: Optional[str] = None
    logstash_host: Optional[str] = None
    logstash_port: int = Field(default=5959, ge=1, le=65535)
    format: Literal["json", "text"] = "text"

    @field_validator("log_level")
    @classmethod
    def _known_level(cls, value: str) -> str:
        parse_log_level(value)
        return value.upper()

    @classmethod
    def resolve(
        cls,
        log_level: Optional[str] = None,
        log_file: Optional[str] = None,
        format: Optional[str] = None,
    ) -> "RunConfig":
        """Flags win over ``LOG_LEVEL``, ``LOG_FILE``, ``LOGSTASH_HOST`` and ``LOGSTASH_PORT``."""
        values = {
            "log_level": log_level or os.getenv("LOG_LEVEL", "INFO"),
            "log_file": log_file or os.getenv("LOG_FILE") or None,
            "logstash_host": os.getenv("LOGSTASH_HOST") or None,
        }
        port = os.getenv("LOGSTASH_PORT")
        if port:
            values["logstash_port"] = port
        if format:
            values["format"] = format
        return cls.model_validate(values)
