# CLI package: argparse commands, input schemas, JSON emission
from src.cli.commands import build_parser, main
from src.cli.schemas import parse_input, resolve_field
