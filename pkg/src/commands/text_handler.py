from semnet.apps.classification import classify_many
from semnet.apps.filtering import format_score
from semnet.apps.profiles import load_profiles
from semnet.apps.terms import check_keywords, spot_terms

class TextHandler:
    """
    Mixin handling the document-level applications: `classify` and `terms`.
    """

    def _handle_classify(self):
        args = self.args
        network = self.load_network(args.network)
        config = self.load_weight_config(network)
        profiles = load_profiles(args.profiles)
        documents = [self.read_text(path, "document") for path in args.document]

        rankings = classify_many(network, config, documents, profiles, self.load_stop(), self.load_norm(),
                                 lang=self.lang, workers=self.workers)

        lines = []
        for path, ranking in zip(args.document, rankings):
            # one column more when several documents share the output
            prefix = f"{path}\t" if len(args.document) > 1 else ""
            lines.extend(f"{prefix}{profile_id}\t{format_score(score)}" for profile_id, score in ranking)
        self.write_output(lines)

    def _handle_terms(self):
        args = self.args
        network = self.load_network(args.network)
        config = self.load_weight_config(network)
        document = self.read_text(args.document, "document")
        stop, norm = self.load_stop(), self.load_norm()

        if args.check:
            keywords = [k.strip() for k in args.check.split(",") if k.strip()]
            checks = check_keywords(network, config, document, keywords, stop, norm,
                                    lang=self.lang, workers=self.workers)
            self.write_output(
                f"{c.keyword}\t{format_score(c.score)}\t{c.rank if c.rank is not None else '-'}" for c in checks)
            return

        terms = spot_terms(network, config, document, args.top, stop, norm, lang=self.lang, workers=self.workers)
        self.write_output(f"{word}\t{format_score(score)}" for word, score in terms)
