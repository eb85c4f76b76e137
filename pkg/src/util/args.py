import sys
from argparse import ArgumentParser, Namespace
from typing import List, NoReturn, Optional

from util.errors import InputError

class SemnetArgumentParser(ArgumentParser):
    """Usage errors are input errors (exit code 1), not argparse's exit code 2."""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        raise InputError(message)

def _network_options(parser: ArgumentParser, weights: bool = True):
    parser.add_argument("--network", required=True, help="Network file (JSON)")
    if weights:
        parser.add_argument("--weights", help="Link-type weight file (JSON)")

def _text_options(parser: ArgumentParser):
    parser.add_argument("--stoplist", help="Stoplist file, one word per line, or nltk:<language>")
    parser.add_argument("--normalize", help="Normalization map, surface<TAB>replacement per line")
    parser.add_argument("--lang", help="Restrict word lookup to this language code")

def build_parser(__version__: str) -> ArgumentParser:
    parser = SemnetArgumentParser(prog="semnet", description="Differential similarity measures over a semantic network")

    parser.add_argument("--debug", action="store_true", help="Enable debug logging")
    parser.add_argument("-q", "--quiet", action="store_true", help="Only log warnings and errors")
    parser.add_argument("-t", "--time", action="store_true", help="Report the time taken by the command")
    parser.add_argument("--no-cache", action="store_true", help="Disable the network index cache")
    parser.add_argument("-p", "--preset", type=str, help="Weight preset (from Semnet.toml)")
    parser.add_argument("--config", type=str, help="Explicit Semnet.toml path")
    parser.add_argument("--workers", type=int, help="Threads used for scoring")
    parser.add_argument("--version", action="version", version=__version__, help="Check version of semnet")

    commands = parser.add_subparsers(dest="command", required=True, metavar="<command>")

    flt = commands.add_parser("filter", help="Keep the corpus sentences closest to a profile")
    _network_options(flt)
    flt.add_argument("--profile", required=True, help='Profile words, "w1,w2,..."')
    flt.add_argument("--corpus", required=True, help="Corpus file (UTF-8 text)")
    flt.add_argument("--line-sentences", action="store_true", help="One sentence per line")
    _text_options(flt)
    flt.add_argument("--keep", type=float, required=True, help="Fraction of sentences to keep, in (0, 1]")
    flt.add_argument("--max-score", type=float, help="Never keep sentences scoring above this")
    flt.add_argument("--measure", choices=("activation", "proximity"), default="activation",
                     help="Sentence scoring measure")
    flt.add_argument("--out", required=True, help="Scored output file ('-' for stdout)")

    evl = commands.add_parser("eval", help="Precision/recall of a scored run per keep fraction")
    evl.add_argument("--scored", required=True, help="Scored file written by filter")
    evl.add_argument("--reference", required=True, help="Relevant sentence ids, one per line")
    evl.add_argument("--grid", help="Keep fractions, e.g. 0.1,0.2,0.3,0.4,0.5")
    evl.add_argument("--max-score", type=float, help="Absolute score cutoff applied at every grid point")

    cls = commands.add_parser("classify", help="Rank profiles by proximity to documents")
    _network_options(cls)
    cls.add_argument("--profiles", required=True, help="Profiles file (JSON array, or [id] lines in .txt)")
    cls.add_argument("--document", required=True, action="append", help="Document file; repeat for several")
    _text_options(cls)

    trm = commands.add_parser("terms", help="Spot the words that best describe a document")
    _network_options(trm)
    trm.add_argument("--document", required=True, help="Document file")
    trm.add_argument("--top", type=int, default=20, help="Number of terms to print")
    trm.add_argument("--check", help="Keywords to verify against the document, k1,k2,...")
    _text_options(trm)

    exp = commands.add_parser("expand", help="Expand a word along typed links")
    _network_options(exp, weights=False)
    exp.add_argument("--word", required=True, help="Word to expand")
    exp.add_argument("--mechanisms", required=True, help="Comma separated mechanisms, e.g. hypernyms,synonyms")
    exp.add_argument("--lang", help="Target language for translation")

    ins = commands.add_parser("inspect", help="Print h, c, NCA, ANCA and both measures for two nodes")
    _network_options(ins)
    ins.add_argument("--nodes", required=True, help="Two node ids (or word labels), A,B")

    return parser

def args(__version__: str, argv: Optional[List[str]] = None) -> Namespace:
    """
    Parse command line arguments.
    Return:
        argparse.Namespace
    """
    return build_parser(__version__).parse_args(argv)
