"""An HTTP service rendering Markdown memories to budget-fitted images.

The service is stateless: every request builds its own style sheet and
renderer, and identical requests get byte-identical responses. Requires
the ``serve`` extra (`fastapi` and `uvicorn`).
"""

import logging
from typing import Any, Dict, Optional

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse, Response
from pydantic import BaseModel, Field

from . import __version__
from .render.pipeline import Renderer
from .render.style import StyleSheet

__all__ = ["RenderRequest", "StyleOverrides", "create_app", "serve"]

logger = logging.getLogger(__name__)

#: The default maximum size of the rendered Markdown, in characters.
MAX_MARKDOWN = 200_000
#: The default maximum area of the rendered page, in pixels.
MAX_CANVAS_PIXELS = 4096 * 4096
#: The maximum font scale a request can give to a block kind.
MAX_SCALE = 16.0


class StyleOverrides(BaseModel):
    """Changes to a style preset, all optional."""

    preset: str = "default"
    canvas_width: Optional[int] = Field(None, ge=1, le=4096)
    margin: Optional[int] = Field(None, ge=0, le=256)
    line_gap: Optional[int] = Field(None, ge=0, le=256)
    bullet_indent: Optional[int] = Field(None, ge=0, le=256)
    bold_stroke: Optional[int] = Field(None, ge=0, le=8)
    scales: Optional[Dict[str, float]] = None

    def build(self) -> StyleSheet:
        style = StyleSheet.preset(self.preset)
        changes: Dict[str, Any] = {}
        for name in ("canvas_width", "margin", "line_gap", "bullet_indent", "bold_stroke"):
            value = getattr(self, name)
            if value is not None:
                changes[name] = value
        if self.scales is not None:
            if any(value > MAX_SCALE for value in self.scales.values()):
                raise ValueError(f"scales cannot exceed {MAX_SCALE}")
            changes["scales"] = self.scales
        return style.replace(**changes) if changes else style


class RenderRequest(BaseModel):
    """A Markdown memory to render, with an optional visual-token budget."""

    markdown: str
    budget: Optional[int] = Field(None, ge=1)
    style: Optional[StyleOverrides] = None


def _error(status: int, message: str) -> JSONResponse:
    return JSONResponse(status_code=status, content={"error": message})


def create_app(
    max_markdown: int = MAX_MARKDOWN,
    max_pixels: int = MAX_CANVAS_PIXELS,
) -> FastAPI:
    """Create the render service application.

    Arguments:
        max_markdown (int): The maximum number of characters of the
            Markdown of a request, above which it is rejected.
        max_pixels (int): The maximum area of the laid out page, in
            pixels, above which a request is rejected before any
            rasterization.

    """
    app = FastAPI(
        title="memocr",
        description="Render Markdown memories to images fitted to a visual-token budget",
        version=__version__,
    )

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(400, f"invalid request: {exc.errors()}")

    @app.get("/health")
    def health() -> Dict[str, str]:
        return {"status": "healthy", "version": __version__}

    @app.post("/render")
    def render(body: RenderRequest) -> Response:
        if len(body.markdown) > max_markdown:
            return _error(413, f"markdown exceeds {max_markdown} characters")
        try:
            style = body.style.build() if body.style is not None else StyleSheet.default()
        except (TypeError, ValueError) as err:
            return _error(400, f"invalid style: {err}")

        renderer = Renderer(style)
        page = renderer.layout(body.markdown)
        width, height = page.canvas
        if width * height > max_pixels:
            return _error(413, f"page of {width}x{height} pixels exceeds {max_pixels} pixels")

        memory = renderer.render(body.markdown).fit(body.budget)
        png = memory.to_png()
        logger.info(
            "rendered %i characters to %ix%i (%i visual tokens)",
            len(body.markdown),
            memory.image.width,
            memory.image.height,
            memory.visual_tokens,
        )
        return Response(
            content=png,
            media_type="image/png",
            headers={
                "X-Visual-Tokens": str(memory.visual_tokens),
                "X-Image-Size": f"{memory.image.width}x{memory.image.height}",
            },
        )

    return app


def serve(
    host: str = "127.0.0.1",
    port: int = 8000,
    max_markdown: int = MAX_MARKDOWN,
    max_pixels: int = MAX_CANVAS_PIXELS,
) -> None:
    """Run the render service with `uvicorn` until interrupted."""
    import uvicorn

    uvicorn.run(create_app(max_markdown, max_pixels), host=host, port=port)
