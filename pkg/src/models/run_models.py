from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Optional


class Command(Enum):
    CURVATURE = "curvature"
    DECOMPOSE = "decompose"
    MATCHING = "matching"
    SPECTRUM = "spectrum"
    VERIFY = "verify"
    SCAN = "scan"
    GENERATE = "generate"


class OutputFormat(Enum):
    JSON = "json"
    CSV = "csv"
    EDGELIST = "edgelist"


EDGE_COMMANDS = {Command.DECOMPOSE, Command.MATCHING}


@dataclass
class RunConfig:
    command: Command
    graph_file: Optional[str] = None
    generator: Optional[str] = None
    edge: Optional[tuple] = None
    all_edges: bool = False
    eps: Optional[Fraction] = None
    format: OutputFormat = OutputFormat.JSON
    certify: bool = False
    seed: Optional[int] = None
    random_graphs: Optional[int] = None
    paley: list = field(default_factory=list)

    def validate(self):
        """Usage errors for this configuration, empty when it is runnable"""
        errors = []
        sources = [s for s in (self.graph_file, self.generator) if s]
        needs_graph = self.command not in (Command.SCAN,) and not (
            self.command is Command.VERIFY and self.random_graphs is not None
        )
        if len(sources) > 1:
            errors.append("Give exactly one graph source: --graph FILE or --generate NAME[:ARGS]")
        elif needs_graph and not sources:
            errors.append("Missing graph source: --graph FILE or --generate NAME[:ARGS]")

        if self.command in EDGE_COMMANDS and self.edge is None:
            errors.append(f"{self.command.value} needs --edge U,V")
        if self.command is Command.CURVATURE and (self.edge is None) == (not self.all_edges):
            errors.append("curvature needs exactly one of --edge U,V or --all")
        if self.command is Command.SCAN and not self.paley:
            errors.append("scan needs --paley Q[,Q...]")
        if self.format is OutputFormat.CSV and self.command is not Command.CURVATURE:
            errors.append("CSV output is only available for the curvature command")
        if self.format is OutputFormat.EDGELIST and self.command is not Command.GENERATE:
            errors.append("edgelist output is only available for the generate command")
        if self.eps is not None and not 0 < self.eps <= 1:
            errors.append(f"--eps must lie in (0, 1], got {self.eps}")
        if self.random_graphs is not None and self.random_graphs < 0:
            errors.append(f"--random needs a non-negative count, got {self.random_graphs}")
        return errors
