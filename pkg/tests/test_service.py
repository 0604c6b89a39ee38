import io
import unittest

import PIL.Image

import memocr

from .utils import try_import

try:
    TestClient = try_import("fastapi.testclient:TestClient")
    service = try_import("memocr.service")
except ImportError:
    TestClient = service = None


@unittest.skipUnless(TestClient, "fastapi and httpx are required")
class TestRenderService(unittest.TestCase):

    def setUp(self):
        self.client = TestClient(service.create_app(max_markdown=1000))

    def test_health(self):
        response = self.client.get("/health")
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.json(), {"status": "healthy", "version": memocr.__version__})

    def test_render(self):
        response = self.client.post("/render", json={"markdown": "# A\n\nb"})
        self.assertEqual(response.status_code, 200)
        self.assertEqual(response.headers["content-type"], "image/png")
        self.assertEqual(response.headers["x-image-size"], "768x92")
        self.assertEqual(response.headers["x-visual-tokens"], "112")
        image = PIL.Image.open(io.BytesIO(response.content))
        self.assertEqual(image.size, (768, 92))

    def test_render_budget(self):
        response = self.client.post("/render", json={"markdown": "# A\n\nb", "budget": 16})
        self.assertEqual(response.headers["x-image-size"], "448x28")
        self.assertEqual(response.content, memocr.Renderer().render("# A\n\nb").fit(16).to_png())

    def test_deterministic(self):
        body = {"markdown": "# Gene\n\n- wrote **Snowbird**", "budget": 64}
        first = self.client.post("/render", json=body)
        second = self.client.post("/render", json=body)
        self.assertEqual(first.content, second.content)

    def test_style(self):
        body = {"markdown": "ab", "style": {"preset": "wide", "margin": 0}}
        response = self.client.post("/render", json=body)
        self.assertEqual(response.headers["x-image-size"], "1024x16")

    def test_invalid_budget(self):
        response = self.client.post("/render", json={"markdown": "a", "budget": 0})
        self.assertEqual(response.status_code, 400)
        self.assertIn("error", response.json())

    def test_invalid_style(self):
        response = self.client.post("/render", json={"markdown": "a", "style": {"preset": "gothic"}})
        self.assertEqual(response.status_code, 400)
        self.assertIn("gothic", response.json()["error"])

    def test_missing_markdown(self):
        response = self.client.post("/render", json={"budget": 16})
        self.assertEqual(response.status_code, 400)

    def test_too_large(self):
        response = self.client.post("/render", json={"markdown": "a" * 1001})
        self.assertEqual(response.status_code, 413)

    def test_style_out_of_bounds(self):
        for style in ({"canvas_width": 2_000_000_000}, {"bold_stroke": 3_000_000}, {"margin": 100_000}):
            response = self.client.post("/render", json={"markdown": "**a**", "style": style})
            self.assertEqual(response.status_code, 400, style)
            self.assertIn("error", response.json())

    def test_scale_out_of_bounds(self):
        body = {"markdown": "a", "style": {"scales": {"paragraph": 1e9}}}
        response = self.client.post("/render", json=body)
        self.assertEqual(response.status_code, 400)
        self.assertIn("scales", response.json()["error"])

    def test_page_too_large(self):
        client = TestClient(service.create_app(max_markdown=1000, max_pixels=50_000))
        response = client.post("/render", json={"markdown": "# A\n\nb"})
        self.assertEqual(response.status_code, 413)
        self.assertIn("768x92", response.json()["error"])
        response = client.post("/render", json={"markdown": "ab"})
        self.assertEqual(response.status_code, 200)
