from django.test import SimpleTestCase

from _settings import celery_app
from inequalities.tasks import evaluate_chunk


class CeleryAppTests(SimpleTestCase):

    def test_settings_namespace(self):
        """
        CELERY_* settings reach the app and scans run eagerly by default
        """
        self.assertTrue(celery_app.conf.task_always_eager)
        self.assertEqual(celery_app.conf.task_serializer, "json")
        self.assertEqual(celery_app.main, "pmeans")

    def test_scan_task_registered(self):
        celery_app.loader.import_default_modules()
        self.assertIn(evaluate_chunk.name, celery_app.tasks)

    def test_empty_chunk(self):
        self.assertEqual(evaluate_chunk.delay([], 1e-12).get(), [])
