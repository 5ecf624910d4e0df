import pathlib
import sys

# allow running pytest straight from a checkout, without installing
sys.path.insert(0, str(pathlib.Path(__file__).parent / "src"))
