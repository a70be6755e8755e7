"""Allow ``python -m cubecovers`` as an alternative to the console script."""

from cubecovers.cli import main

if __name__ == "__main__":
    main()
