import sys

from abelian_toolkit import explorer


def main():
    e = explorer.GroupExplorer()
    sys.exit(e.run())
