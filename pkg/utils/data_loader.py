"""
Data loader utility for loading reference data from JSON files.
Feeds the reference graph corpus to the tests and the expectation registry to the harness.
"""

import json
from typing import Any
from config.settings import DATA_DIR
from utils.logger import setup_logger

logger = setup_logger(__name__)


class DataLoader:
    """Utility class for loading reference data from the data directory."""

    @staticmethod
    def load_json(filename: str) -> dict[str, Any]:
        """
        Load data from a JSON file.

        Args:
            filename: Name of the JSON file (with or without .json extension)

        Returns:
            Dictionary containing the JSON data

        Raises:
            FileNotFoundError: If the file doesn't exist
            json.JSONDecodeError: If the file is not valid JSON
        """
        if not filename.endswith(".json"):
            filename = f"{filename}.json"

        filepath = DATA_DIR / filename
        logger.debug(f"Loading JSON data from: {filepath}")

        with open(filepath, "r", encoding="utf-8") as file:
            data = json.load(file)
            logger.debug(f"Successfully loaded JSON data from {filename}")
            return data

    @staticmethod
    def get_corpus() -> list[dict[str, Any]]:
        """Get the reference corpus: edge lists with expected vertex transmissions."""
        data = DataLoader.load_json("corpus")
        return data.get("graphs", [])

    @staticmethod
    def get_corpus_graph(graph_id: str) -> dict[str, Any]:
        """
        Get a single corpus entry by id.

        Args:
            graph_id: Corpus identifier (e.g., "irregular-tree-7")

        Returns:
            Corpus entry dictionary

        Raises:
            KeyError: If no entry has that id
        """
        for entry in DataLoader.get_corpus():
            if entry["id"] == graph_id:
                return entry
        raise KeyError(f"Unknown corpus graph: {graph_id}")

    @staticmethod
    def get_registry() -> dict[str, Any]:
        """Get the versioned reproduction registry (version plus tasks)."""
        return DataLoader.load_json("expectations")

    @staticmethod
    def get_tasks() -> list[dict[str, Any]]:
        """Get all registered reproduction tasks."""
        return DataLoader.get_registry().get("tasks", [])

    @staticmethod
    def get_known_counts() -> dict[str, list[int]]:
        """Get published isomorphism-class counts indexed from order 1."""
        data = DataLoader.load_json("corpus")
        return data.get("known_counts", {})
