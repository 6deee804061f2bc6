"""Main entry point for ddhpake: ``python main.py server ...``."""

from src.cli import main

if __name__ == "__main__":
    main()
