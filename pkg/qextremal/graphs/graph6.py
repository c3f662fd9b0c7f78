"""graph6

Encoding and decoding of the graph6 text format through networkx.

The order is written as one byte ``n + 63`` for ``n <= 62``, as ``~``
followed by 18 bits for ``n <= 258047`` and as ``~~`` followed by 36 bits
beyond that. The upper triangle follows column by column, six bits per
byte, each byte offset by 63. networkx does the packing; the checks here
turn malformed input into distinct errors before it is handed over, since
networkx accepts a trailing newline, unchecked padding bits and truncated
size headers.
"""
import networkx as nx

from ..core.errors import Error
from .graph import Graph

HEADER = b">>graph6<<"


class Graph6Error(Error):
    """graph6 Error Exception"""


class HeaderError(Graph6Error):
    """The size header is missing or truncated"""


class CharacterError(Graph6Error):
    """A byte lies outside the printable range 63..126"""


class LengthError(Graph6Error):
    """The edge data is shorter than the order requires"""


class TrailingDataError(Graph6Error):
    """Bytes or padding bits remain after the edge data"""


def to_networkx(G):
    """Return *G* as a :class:`networkx.Graph` on the nodes ``0 .. n-1``"""

    H = nx.Graph()
    H.add_nodes_from(range(G.n))
    H.add_edges_from(G.edges())
    return H


def from_networkx(H):
    """Return the :class:`~.graph.Graph` of *H*, nodes taken in sorted order"""

    order = sorted(H.nodes())
    position = dict((v, i) for i, v in enumerate(order))
    return Graph.from_edges(len(order), [(position[u], position[v]) for u, v in H.edges()])


def graph6_encode(G):
    """Return the graph6 bytes of *G* (no trailing newline)

    :param G: a :class:`~.graph.Graph`
    :returns bytes:
    """

    return nx.to_graph6_bytes(to_networkx(G), header=False).rstrip(b"\n")


def _read_size(data):
    if not data:
        raise HeaderError("empty graph6 string")

    if data[0] != 63:
        return data[0], 1

    if len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise HeaderError("truncated 36-bit size header")
        fields, start = data[2:8], 8
    else:
        if len(data) < 4:
            raise HeaderError("truncated 18-bit size header")
        fields, start = data[1:4], 4

    n = 0
    for x in fields:
        n = (n << 6) | x
    return n, start


def _validate(text):
    for position, byte in enumerate(bytearray(text)):
        if not 63 <= byte <= 126:
            raise CharacterError("byte {0:d} at position {1:d} outside 63..126".format(byte, position))

    data = [byte - 63 for byte in bytearray(text)]
    n, start = _read_size(data)

    pairs = n * (n - 1) // 2
    needed = (pairs + 5) // 6
    body = data[start:]

    if len(body) < needed:
        raise LengthError("order {0:d} needs {1:d} data bytes, got {2:d}".format(n, needed, len(body)))

    if len(body) > needed:
        raise TrailingDataError("{0:d} bytes after the edge data".format(len(body) - needed))

    padding = 6 * needed - pairs
    if needed and body[-1] & ((1 << padding) - 1):
        raise TrailingDataError("non-zero padding bits")


def graph6_decode(text):
    """Parse graph6 *text* (bytes or str) into a :class:`~.graph.Graph`

    An optional ``>>graph6<<`` header and one trailing newline are
    accepted.

    :raises HeaderError: missing or truncated size header
    :raises CharacterError: byte outside 63..126
    :raises LengthError: too little edge data
    :raises TrailingDataError: extra bytes or non-zero padding bits
    """

    if isinstance(text, str):
        try:
            text = text.encode("ascii")
        except UnicodeEncodeError:
            raise CharacterError("graph6 text must be ASCII")

    if text.startswith(HEADER):
        text = text[len(HEADER):]

    if text.endswith(b"\n"):
        text = text[:-1]

    _validate(text)

    H = nx.from_graph6_bytes(text)
    return Graph.from_edges(H.number_of_nodes(), H.edges())
