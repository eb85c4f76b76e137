import io

from semnet.apps.evaluation import evaluate_ranking, load_reference, parse_grid
from semnet.apps.filtering import filter_sentences, read_scored, write_scored
from semnet.apps.profiles import profile_from_words
from semnet.textproc import segment

class FilterHandler:
    """
    Mixin handling `semnet filter` and `semnet eval`.
    """

    def _handle_filter(self):
        args = self.args
        network = self.load_network(args.network)
        config = self.load_weight_config(network)
        corpus = segment(self.read_text(args.corpus, "corpus"), line_sentences=args.line_sentences)

        scored = filter_sentences(
            network, config, profile_from_words(args.profile), corpus, args.keep,
            self.load_stop(), self.load_norm(),
            lang=self.lang, max_score=args.max_score, measure_name=args.measure,
            workers=self.workers,
        )

        buffer = io.StringIO()
        write_scored(scored, buffer)
        self.write_output(buffer.getvalue().splitlines(), args.out)

    def _handle_eval(self):
        args = self.args
        scored = read_scored(args.scored)
        reference = load_reference(args.reference)
        grid = parse_grid(args.grid) if args.grid else self.config.get_grid()

        report = evaluate_ranking(scored, reference, grid, max_score=args.max_score)
        self.write_output(report.to_table())
