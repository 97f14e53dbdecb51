# HATEOAS link generation for the coloring API.


def link(href: str, method: str | None = None) -> dict:
    """Create a link dict with optional HTTP method."""
    d = {"href": href}
    if method:
        d["method"] = method
    return d


def root_links() -> dict:
    return {
        "color": link("/api/color", "POST"),
        "verify": link("/api/verify", "POST"),
        "channels": link("/api/channels", "POST"),
        "chi": link("/api/chi", "POST"),
        "chromatic_index": link("/api/chromatic-index", "POST"),
        "classify": link("/api/classify", "POST"),
        "cycle": link("/api/gen/cycle/{n}"),
        "complete": link("/api/gen/complete/{n}"),
        "k4plus": link("/api/gen/k4plus"),
    }


def coloring_links(self_href: str, method: str = "POST") -> dict:
    """Links for a colored graph: where to check it and what to do with it next."""
    return {
        "self": link(self_href, method),
        "verify": link("/api/verify", "POST"),
        "channels": link("/api/channels", "POST"),
        "root": link("/api"),
    }


def analysis_links(self_href: str) -> dict:
    links = {
        "self": link(self_href, "POST"),
        "color": link("/api/color", "POST"),
        "root": link("/api"),
    }
    if self_href != "/api/classify":
        links["classify"] = link("/api/classify", "POST")
    return links
