# Exit codes of the command line surface

EX_OK = 0
# a mathematically meaningful negative verdict: a set that fails verification,
# a harness counterexample, a table mismatch
EX_NEGATIVE = 1
EX_USAGE = 2

# Search and enumeration limits (overridable through equidim.toml)
DEFAULT_BUDGET = 5_000_000
DEFAULT_WORKERS = 1
DEFAULT_FORMAT = "human"
R_EXACT_LIMIT = 123
TREE_LIMIT = 14
ENUM_LIMIT = 7
SEARCH_MAX_ORDER = 64
GRAPH6_MAX_ORDER = 4096

# fixed chunk size for harness corpora, independent of the worker count
HARNESS_CHUNK_SIZE = 256

CONFIG_FILE_NAME = "equidim.toml"
CONFIG_SECTION = "equidim"

OUTPUT_FORMATS = ("human", "json", "tsv", "yaml")
