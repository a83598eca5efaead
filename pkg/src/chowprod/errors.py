"""Exception types shared across the package.

The CLI maps every ChowprodError to exit code 1; each subclass carries a
distinct message prefix so callers can tell input problems apart.
"""


class ChowprodError(Exception):
    prefix = "error"

    def __str__(self):
        return "%s: %s" % (self.prefix, super().__str__())


class GraphInputError(ChowprodError):
    """Malformed graph or product description."""

    prefix = "graph input error"


class ExprParseError(ChowprodError):
    """Unparseable polynomial expression."""

    prefix = "expression parse error"


class SizeLimitError(ChowprodError):
    """Requested computation exceeds the configured cell budget."""

    prefix = "size limit exceeded"


class KernelConditionError(ChowprodError):
    """Gluing input is not in the kernel of the difference map."""

    prefix = "kernel condition violated"


class OracleError(ChowprodError):
    """Lattice oracle met a state it cannot certify."""

    prefix = "oracle error"
