"""
Construction controller: dispatches build requests to the pipelines and keeps an execution history.
"""

import logging
from datetime import datetime
from typing import Any, Callable, Dict, List, Optional

from errors import UsageError
from factorization import MoveEngine
from mcg import Evaluator

from .pipeline import PipelineReport, StageRunner
from .theorem1 import THEOREM1, build_theorem1
from .theorem2 import THEOREM2, build_theorem2


class ConstructionController:
    """
    Main entry point for the constructions.

    Each request gets a fresh evaluator and move engine so image-curve
    names and caches never leak between builds.
    """

    def __init__(self, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the ConstructionController.

        Args:
            config: ``engine`` section of the configuration (word budget,
                default level, check_moves, keep_intermediates)
        """
        self.config = dict(config or {})
        self.name = self.config.get("name", "ConstructionController")
        self.keep_intermediates = self.config.get("keep_intermediates", False)

        self.logger = logging.getLogger(self.__class__.__name__)
        self.logger.info(f"Initialized {self.name}")

        self.execution_history: List[Dict[str, Any]] = []
        self.current_status = "idle"

    def _processors(self) -> Dict[str, Callable[[StageRunner, Dict[str, Any]], PipelineReport]]:
        return {
            THEOREM1: lambda runner, request: build_theorem1(runner, int(request["genus"])),
            THEOREM2: lambda runner, request: build_theorem2(runner, int(request["genus"]), int(request["n"])),
        }

    def new_runner(self) -> StageRunner:
        evaluator = Evaluator(self.config)
        engine = MoveEngine(evaluator, self.config)
        return StageRunner(evaluator, engine, {
            "keep_intermediates": self.keep_intermediates,
            "lift_level": self.config.get("lift_level", "L1"),
        })

    def execute(self, request: Dict[str, Any]) -> PipelineReport:
        """
        Run one build request.

        Args:
            request: ``{"theorem": "thm1"|"thm2", "genus": g, "n": n}``

        Returns:
            The pipeline report

        Raises:
            UsageError: unknown theorem or missing parameters
            MonodromyError: any failure inside the pipeline (recorded first)
        """
        theorem = request.get("theorem")
        processors = self._processors()
        if theorem not in processors:
            raise UsageError(f"unknown construction '{theorem}', expected one of {sorted(processors)}")
        if "genus" not in request or (theorem == THEOREM2 and "n" not in request):
            raise UsageError(f"{theorem} request is missing parameters: {request}")

        start_time = datetime.now()
        self.current_status = "executing"
        self.logger.info(f"Executing {theorem} with {request}")
        try:
            report = processors[theorem](self.new_runner(), request)
        except Exception as e:
            self.execution_history.append({
                "request": dict(request),
                "error": str(e),
                "timestamp": start_time,
                "duration": (datetime.now() - start_time).total_seconds(),
                "status": "error",
            })
            self.current_status = "error"
            self.logger.error(f"Build {theorem} failed: {e}")
            raise

        record = {
            "request": dict(request),
            "cycles": len(report.final),
            "timestamp": start_time,
            "duration": (datetime.now() - start_time).total_seconds(),
            "status": "inconclusive" if report.inconclusive else "success",
        }
        self.execution_history.append(record)
        self.current_status = "idle"
        self.logger.info(f"Built {theorem} with {record['cycles']} cycles in {record['duration']:.2f}s")
        return report

    def get_status(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "current_status": self.current_status,
            "execution_count": len(self.execution_history),
            "last_execution": self.execution_history[-1]["timestamp"].isoformat() if self.execution_history else None,
        }

    def get_execution_history(self) -> list:
        return self.execution_history.copy()

    def reset(self) -> None:
        """Reset controller state."""
        self.execution_history.clear()
        self.current_status = "idle"
        self.logger.info("Controller state reset")
