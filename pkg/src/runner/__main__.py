"""Allow running the CLI as a module: python -m src.runner"""

from .cli import main

if __name__ == "__main__":
    main()
