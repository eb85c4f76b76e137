from util.errors import InputError
from semnet.ancestry import AncestrySubject, subject_for
from semnet.apps.expansion import ExpansionRequest, expand, format_expansion, parse_mechanisms
from semnet.apps.inspection import format_inspection, inspect_pair
from semnet.network import SemanticNetwork

class GraphHandler:
    """
    Mixin handling the network-level subcommands: `expand` and `inspect`.
    """

    def _handle_expand(self):
        args = self.args
        network = self.load_network(args.network)
        request = ExpansionRequest(args.word, parse_mechanisms(args.mechanisms), args.lang)
        result = expand(network, request, self.config.get_link_types())
        self.write_output(format_expansion(result))

    @staticmethod
    def _subject(network: SemanticNetwork, name: str) -> AncestrySubject:
        """A node id as is; otherwise every sense of the word label."""
        if name in network:
            return name
        senses = network.lookup_word(name)
        if not senses:
            raise InputError(f"'{name}' is neither a node id nor a known word")
        return subject_for(network, senses)

    def _handle_inspect(self):
        args = self.args
        names = [n.strip() for n in args.nodes.split(",") if n.strip()]
        if len(names) != 2:
            raise InputError(f"--nodes expects exactly two nodes, got {len(names)}")

        network = self.load_network(args.network)
        config = self.load_weight_config(network)
        a, b = (self._subject(network, n) for n in names)
        self.write_output(format_inspection(network, inspect_pair(network, a, b, config)))
