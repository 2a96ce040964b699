"""Construction-recipe DSL: a small expression language naming pipelines of
hypergraph constructions.

Grammar (recursive descent)::

    expr  := IDENT | IDENT '(' args ')'
    args  := arg (',' arg)*
    arg   := INT | expr | '[' expr (',' expr)* ']'

Constructors: k1, triangle, fano, complete(v, n), am(outer, inner), aht(core),
m8first(h1, h2, h3), maht2(core), maht3(core), gaht(core, k),
mc(k, core, hk[, hx]), block(core, [h...], k), mblock(k, hc, h1c, h1p, hkk),
preset(m1..m17).

Parsing validates arities and uniformities before any generation; errors
carry the byte offset of the offending token and the printed subtree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterator, Union

from . import constructions as cx
from .hypergraph import Hypergraph, complete_hypergraph, seed


class RecipeError(ValueError):
    def __init__(self, message: str, offset: int | None = None):
        self.offset = offset
        if offset is not None:
            message = f"{message} (offset {offset})"
        super().__init__(message)


@dataclass(frozen=True)
class Seed:
    name: str


@dataclass(frozen=True)
class Complete:
    v: int
    n: int


@dataclass(frozen=True)
class Am:
    outer: "Recipe"
    inner: "Recipe"


@dataclass(frozen=True)
class Aht:
    core: "Recipe"


@dataclass(frozen=True)
class M8First:
    h1: "Recipe"
    h2: "Recipe"
    h3: "Recipe"


@dataclass(frozen=True)
class Maht2:
    core: "Recipe"


@dataclass(frozen=True)
class Maht3:
    core: "Recipe"


@dataclass(frozen=True)
class Gaht:
    core: "Recipe"
    k: int


@dataclass(frozen=True)
class Mc:
    k: int
    core: "Recipe"
    hk: "Recipe"
    hx: "Recipe | None"


@dataclass(frozen=True)
class Block:
    core: "Recipe"
    blocks: tuple["Recipe", ...]
    k: int


@dataclass(frozen=True)
class MBlock:
    k: int
    hc: "Recipe"
    h1c: "Recipe"
    h1p: "Recipe"
    hkk: "Recipe"


@dataclass(frozen=True)
class Preset:
    name: str
    expansion: "Recipe"


Recipe = Union[Seed, Complete, Am, Aht, M8First, Maht2, Maht3, Gaht, Mc, Block, MBlock, Preset]

_RECIPE_TYPES = (Seed, Complete, Am, Aht, M8First, Maht2, Maht3, Gaht, Mc, Block, MBlock, Preset)


# Table-derived preset pipelines; each evaluates to the published bound value
# for its uniformity (asserted by the test suite against the bound table).
PRESETS: dict[str, str] = {
    "m1": "k1",
    "m2": "triangle",
    "m3": "fano",
    "m4": "aht(triangle)",
    "m5": "aht(fano)",
    "m6": "am(triangle, fano)",
    "m7": "aht(aht(fano))",
    "m8": "mc(5, fano, aht(fano), fano)",
    "m9": "am(fano, fano)",
    "m10": "am(triangle, aht(fano))",
    "m11": "maht3(am(fano, fano))",
    "m12": "am(aht(triangle), fano)",
    "m13": "mblock(4, aht(fano), fano, aht(fano), aht(triangle))",
    "m14": "mc(5, am(fano, fano), aht(fano), aht(triangle))",
    "m15": "am(aht(fano), fano)",
    "m16": "mblock(5, am(triangle, fano), aht(triangle), am(triangle, fano), aht(fano))",
    "m17": "mc(7, am(triangle, aht(fano)), aht(aht(fano)), fano)",
}


# ---------------------------------------------------------------------------
# Tokenizer / parser
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Token:
    kind: str  # IDENT, INT, LPAREN, RPAREN, LBRACK, RBRACK, COMMA, END
    text: str
    offset: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "()[],":
            kind = {"(": "LPAREN", ")": "RPAREN", "[": "LBRACK", "]": "RBRACK", ",": "COMMA"}[ch]
            tokens.append(_Token(kind, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(_Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(_Token("IDENT", text[i:j], i))
            i = j
            continue
        raise RecipeError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("END", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise RecipeError(f"expected {kind}, found {tok.kind} {tok.text!r}", tok.offset)
        return self.advance()

    def parse(self) -> Recipe:
        node = self.parse_expr()
        tok = self.peek()
        if tok.kind != "END":
            raise RecipeError(f"trailing input {tok.text!r}", tok.offset)
        return node

    def parse_expr(self) -> Recipe:
        tok = self.expect("IDENT")
        name = tok.text
        if name == "preset":
            self.expect("LPAREN")
            ptok = self.expect("IDENT")
            self.expect("RPAREN")
            if ptok.text not in PRESETS:
                raise RecipeError(f"unknown preset {ptok.text!r}", ptok.offset)
            return Preset(ptok.text, _parse_raw(PRESETS[ptok.text]))
        args: list[object] = []
        if self.peek().kind == "LPAREN":
            self.advance()
            args.append(self.parse_arg(name))
            while self.peek().kind == "COMMA":
                self.advance()
                args.append(self.parse_arg(name))
            self.expect("RPAREN")
        return self.make_node(name, args, tok.offset)

    def parse_arg(self, ctx: str) -> object:
        tok = self.peek()
        if tok.kind == "INT":
            self.advance()
            return int(tok.text)
        if tok.kind == "LBRACK":
            self.advance()
            items = [self.parse_expr()]
            while self.peek().kind == "COMMA":
                self.advance()
                items.append(self.parse_expr())
            self.expect("RBRACK")
            return tuple(items)
        if tok.kind == "IDENT":
            return self.parse_expr()
        raise RecipeError(f"expected an argument, found {tok.kind} {tok.text!r}", tok.offset)

    def make_node(self, name: str, args: list[object], offset: int) -> Recipe:
        def want(signature: str, kinds: list[object]) -> None:
            checks = [_RECIPE_TYPES if k is Recipe else k for k in kinds]
            if len(args) != len(checks) or not all(
                isinstance(a, k) for a, k in zip(args, checks)  # type: ignore[arg-type]
            ):
                raise RecipeError(f"{name} expects {signature}", offset)

        if name in ("k1", "triangle", "fano"):
            if args:
                raise RecipeError(f"{name} takes no arguments", offset)
            return Seed(name)
        if name == "complete":
            want("(v, n) integers", [int, int])
            return Complete(args[0], args[1])  # type: ignore[arg-type]
        if name == "am":
            want("(outer, inner) recipes", [Recipe, Recipe])
            return Am(args[0], args[1])  # type: ignore[arg-type]
        if name == "aht":
            want("(core) recipe", [Recipe])
            return Aht(args[0])  # type: ignore[arg-type]
        if name == "m8first":
            want("(h1, h2, h3) recipes", [Recipe, Recipe, Recipe])
            return M8First(args[0], args[1], args[2])  # type: ignore[arg-type]
        if name == "maht2":
            want("(core) recipe", [Recipe])
            return Maht2(args[0])  # type: ignore[arg-type]
        if name == "maht3":
            want("(core) recipe", [Recipe])
            return Maht3(args[0])  # type: ignore[arg-type]
        if name == "gaht":
            want("(core, k)", [Recipe, int])
            return Gaht(args[0], args[1])  # type: ignore[arg-type]
        if name == "mc":
            if len(args) == 3:
                want("(k, core, hk)", [int, Recipe, Recipe])
                return Mc(args[0], args[1], args[2], None)  # type: ignore[arg-type]
            want("(k, core, hk, hx)", [int, Recipe, Recipe, Recipe])
            return Mc(args[0], args[1], args[2], args[3])  # type: ignore[arg-type]
        if name == "block":
            want("(core, [h...], k)", [Recipe, tuple, int])
            return Block(args[0], args[1], args[2])  # type: ignore[arg-type]
        if name == "mblock":
            want("(k, hc, h1c, h1p, hkk)", [int, Recipe, Recipe, Recipe, Recipe])
            return MBlock(args[0], args[1], args[2], args[3], args[4])  # type: ignore[arg-type]
        raise RecipeError(f"unknown constructor {name!r}", offset)


def _parse_raw(text: str) -> Recipe:
    return _Parser(text).parse()


def print_recipe(r: Recipe) -> str:
    """Canonical text form; a fixed point of parse-then-print."""
    if isinstance(r, Seed):
        return r.name
    if isinstance(r, Complete):
        return f"complete({r.v}, {r.n})"
    if isinstance(r, Am):
        return f"am({print_recipe(r.outer)}, {print_recipe(r.inner)})"
    if isinstance(r, Aht):
        return f"aht({print_recipe(r.core)})"
    if isinstance(r, M8First):
        return f"m8first({print_recipe(r.h1)}, {print_recipe(r.h2)}, {print_recipe(r.h3)})"
    if isinstance(r, Maht2):
        return f"maht2({print_recipe(r.core)})"
    if isinstance(r, Maht3):
        return f"maht3({print_recipe(r.core)})"
    if isinstance(r, Gaht):
        return f"gaht({print_recipe(r.core)}, {r.k})"
    if isinstance(r, Mc):
        parts = [str(r.k), print_recipe(r.core), print_recipe(r.hk)]
        if r.hx is not None:
            parts.append(print_recipe(r.hx))
        return f"mc({', '.join(parts)})"
    if isinstance(r, Block):
        inner = ", ".join(print_recipe(b) for b in r.blocks)
        return f"block({print_recipe(r.core)}, [{inner}], {r.k})"
    if isinstance(r, MBlock):
        parts = [str(r.k)] + [print_recipe(x) for x in (r.hc, r.h1c, r.h1p, r.hkk)]
        return f"mblock({', '.join(parts)})"
    if isinstance(r, Preset):
        return f"preset({r.name})"
    raise RecipeError(f"unprintable node {r!r}")


# ---------------------------------------------------------------------------
# Static validation: uniformity and vertex count, no generation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecipeInfo:
    uniformity: int
    num_vertices: int


def recipe_info(r: Recipe) -> RecipeInfo:
    """Uniformity/vertex shape of the output, validating component arities."""

    def fail(msg: str) -> RecipeError:
        return RecipeError(f"{msg} in {print_recipe(r)}")

    if isinstance(r, Seed):
        shape = {"k1": (1, 1), "triangle": (2, 3), "fano": (3, 7)}[r.name]
        return RecipeInfo(*shape)
    if isinstance(r, Complete):
        if not 1 <= r.n <= r.v:
            raise fail(f"need 1 <= n <= v, got n={r.n}, v={r.v}")
        return RecipeInfo(r.n, r.v)
    if isinstance(r, Am):
        outer, inner = recipe_info(r.outer), recipe_info(r.inner)
        return RecipeInfo(outer.uniformity * inner.uniformity, outer.num_vertices * inner.num_vertices)
    if isinstance(r, Aht):
        core = recipe_info(r.core)
        n = core.uniformity + 2
        return RecipeInfo(n, core.num_vertices + 2 * n)
    if isinstance(r, M8First):
        i1, i2, i3 = (recipe_info(x) for x in (r.h1, r.h2, r.h3))
        if i1.uniformity != 3 or i2.uniformity != 3:
            raise fail("first two components must be 3-uniform")
        if i3.uniformity != 5:
            raise fail("third component must be 5-uniform")
        return RecipeInfo(8, 16 + i1.num_vertices + i2.num_vertices + i3.num_vertices)
    if isinstance(r, Maht2):
        core = recipe_info(r.core)
        n = core.uniformity + 2
        return RecipeInfo(n, core.num_vertices + 2 * n)
    if isinstance(r, Maht3):
        core = recipe_info(r.core)
        n = core.uniformity + 2
        return RecipeInfo(n, core.num_vertices + 4 * n - 4)
    if isinstance(r, Gaht):
        if r.k < 1:
            raise fail(f"k must be >= 1, got {r.k}")
        core = recipe_info(r.core)
        n = core.uniformity + 2 * r.k
        return RecipeInfo(n, core.num_vertices + 2 * (n + r.k - 1))
    if isinstance(r, Mc):
        core, hk = recipe_info(r.core), recipe_info(r.hk)
        n = core.uniformity + r.k
        if not 0 < r.k < n:
            raise fail(f"need 0 < k < n, got k={r.k}, n={n}")
        if hk.uniformity != r.k:
            raise fail(f"k-component must be {r.k}-uniform, got {hk.uniformity}")
        p = cx.MultiCoreParams.compute(n, r.k)
        nv = core.num_vertices + p.w * hk.num_vertices
        if p.x > 0:
            if r.hx is None:
                raise fail(f"x = {p.x} > 0 requires a fourth component")
            hx = recipe_info(r.hx)
            if hx.uniformity != p.x:
                raise fail(f"x-component must be {p.x}-uniform, got {hx.uniformity}")
            nv += (p.x + p.z - 1) + p.y * hx.num_vertices
        elif r.hx is not None:
            raise fail("x = 0 admits no fourth component")
        return RecipeInfo(n, nv)
    if isinstance(r, Block):
        if r.k < 1:
            raise fail(f"k must be >= 1, got {r.k}")
        core = recipe_info(r.core)
        n = core.uniformity + 2 * r.k
        infos = [recipe_info(b) for b in r.blocks]
        for info in infos:
            if info.uniformity < r.k:
                raise fail(f"block uniformity {info.uniformity} below the minimum {r.k}")
        if sum(info.uniformity for info in infos) < n:
            raise fail(f"block uniformities must sum to at least {n}")
        return RecipeInfo(n, core.num_vertices + 2 * sum(info.num_vertices for info in infos))
    if isinstance(r, MBlock):
        if r.k < 2:
            raise fail(f"k must be >= 2, got {r.k}")
        hc, h1c, h1p, hkk = (recipe_info(x) for x in (r.hc, r.h1c, r.h1p, r.hkk))
        if hc.uniformity != r.k + 1:
            raise fail(f"core must be {r.k + 1}-uniform, got {hc.uniformity}")
        if h1p.uniformity != r.k + 1:
            raise fail(f"H'_1 must be {r.k + 1}-uniform, got {h1p.uniformity}")
        if h1c.uniformity != r.k - 1:
            raise fail(f"wrap core must be {r.k - 1}-uniform, got {h1c.uniformity}")
        if hkk.uniformity != r.k:
            raise fail(f"k-component must be {r.k}-uniform, got {hkk.uniformity}")
        nv = (
            hc.num_vertices
            + h1c.num_vertices + 2 * (r.k + 1)
            + h1p.num_vertices
            + 4 * hkk.num_vertices
        )
        return RecipeInfo(3 * r.k + 1, nv)
    if isinstance(r, Preset):
        return recipe_info(r.expansion)
    raise RecipeError(f"unknown node {r!r}")


def parse_recipe(text: str) -> Recipe:
    """Parse and statically validate a recipe expression."""
    node = _parse_raw(text)
    recipe_info(node)
    return node


# ---------------------------------------------------------------------------
# Building
# ---------------------------------------------------------------------------


def build_recipe(r: Recipe) -> Hypergraph:
    """Materialize the hypergraph named by ``r`` (count identities asserted
    by the underlying constructions)."""
    if isinstance(r, Seed):
        return seed(r.name)
    if isinstance(r, Complete):
        return complete_hypergraph(r.v, r.n)
    if isinstance(r, Am):
        return cx.abbott_moser(build_recipe(r.outer), build_recipe(r.inner))
    if isinstance(r, Aht):
        return cx.abbott_hanson_toft(build_recipe(r.core))
    if isinstance(r, M8First):
        return cx.mathews_first(build_recipe(r.h1), build_recipe(r.h2), build_recipe(r.h3))
    if isinstance(r, Maht2):
        return cx.mathews_second(build_recipe(r.core))
    if isinstance(r, Maht3):
        return cx.mathews_third(build_recipe(r.core))
    if isinstance(r, Gaht):
        return cx.generalized_aht(build_recipe(r.core), r.k)
    if isinstance(r, Mc):
        hx = build_recipe(r.hx) if r.hx is not None else None
        return cx.multi_core(build_recipe(r.core), build_recipe(r.hk), hx, r.k)
    if isinstance(r, Block):
        core = build_recipe(r.core)
        blocks = tuple(build_recipe(b) for b in r.blocks)
        spec = cx.BlockSpec(core, blocks, core.uniformity + 2 * r.k)
        return cx.block(spec)
    if isinstance(r, MBlock):
        return cx.modified_block(
            r.k,
            build_recipe(r.hc),
            build_recipe(r.h1c),
            build_recipe(r.h1p),
            build_recipe(r.hkk),
        )
    if isinstance(r, Preset):
        return build_recipe(r.expansion)
    raise RecipeError(f"unknown node {r!r}")


def _root_stream(r: Recipe) -> cx.EdgeStream:
    if isinstance(r, Seed):
        h = seed(r.name)
        return cx.EdgeStream(h.uniformity, h.num_vertices, iter(h.edges), False)
    if isinstance(r, Complete):
        return cx.EdgeStream(r.n, r.v, itertools.combinations(range(r.v), r.n), False)
    if isinstance(r, Am):
        return cx.abbott_moser_stream(build_recipe(r.outer), build_recipe(r.inner))
    if isinstance(r, Aht):
        return cx.abbott_hanson_toft_stream(build_recipe(r.core))
    if isinstance(r, M8First):
        return cx.mathews_first_stream(
            build_recipe(r.h1), build_recipe(r.h2), build_recipe(r.h3)
        )
    if isinstance(r, Maht2):
        return cx.mathews_second_stream(build_recipe(r.core))
    if isinstance(r, Maht3):
        return cx.mathews_third_stream(build_recipe(r.core))
    if isinstance(r, Gaht):
        return cx.generalized_aht_stream(build_recipe(r.core), r.k)
    if isinstance(r, Mc):
        hx = build_recipe(r.hx) if r.hx is not None else None
        return cx.multi_core_stream(build_recipe(r.core), build_recipe(r.hk), hx, r.k)
    if isinstance(r, Block):
        core = build_recipe(r.core)
        blocks = tuple(build_recipe(b) for b in r.blocks)
        return cx.block_stream(cx.BlockSpec(core, blocks, core.uniformity + 2 * r.k))
    if isinstance(r, MBlock):
        return cx.modified_block_stream(
            r.k,
            build_recipe(r.hc),
            build_recipe(r.h1c),
            build_recipe(r.h1p),
            build_recipe(r.hkk),
        )
    if isinstance(r, Preset):
        return _root_stream(r.expansion)
    raise RecipeError(f"unknown node {r!r}")


@dataclass(frozen=True)
class StreamCount:
    uniformity: int
    num_vertices: int
    num_edges: int


def stream_count_recipe(r: Recipe) -> StreamCount:
    """Distinct-edge count without materializing the outermost hypergraph.

    Components are still built normally.  Constructions whose generators can
    repeat an edge fall back to set-based dedup; all others are counted as
    generated (their generators are duplicate-free, so the streamed count is
    the deduplicated count).
    """
    s = _root_stream(r)
    n = s.uniformity
    if s.dedup_required:
        edges = set()
        for e in s.edges:
            if len(e) != n:
                raise cx.ConstructionError(f"streamed edge {e} has arity {len(e)}, expected {n}")
            edges.add(e)
        count = len(edges)
    else:
        count = 0
        for e in s.edges:
            if len(e) != n:
                raise cx.ConstructionError(f"streamed edge {e} has arity {len(e)}, expected {n}")
            count += 1
    return StreamCount(n, s.num_vertices, count)
