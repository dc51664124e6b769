from argparse import Namespace
from pathlib import Path
from typing import BinaryIO

from loguru import logger
from pydantic import BaseModel

from majca.models.responses import CommandResponse

# argparse destinations that are not request fields
_PLUMBING = {"command", "handler", "log_level"}


def request_from(args: Namespace, model: type[BaseModel]):
    fields = {k: v for k, v in vars(args).items() if k not in _PLUMBING and v is not None}
    return model(**fields)


def json_document(command: str, result: BaseModel, message: str = "Success") -> bytes:
    response = CommandResponse(command=command, message=message, result=result.model_dump())
    return (response.model_dump_json(indent=2) + "\n").encode("utf-8")


def text_document(lines: list[str]) -> bytes:
    return ("\n".join(lines) + "\n").encode("utf-8")


def emit(document: bytes, out: BinaryIO, output: str | None = None):
    if output:
        Path(output).write_bytes(document)
        logger.info(f"Wrote {len(document)} bytes to {output}")
    else:
        out.write(document)
        out.flush()
