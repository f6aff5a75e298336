import os
from celery import Celery


os.environ.setdefault('DJANGO_SETTINGS_MODULE', '_settings.settings')

app = Celery('pmeans')

# CELERY_* settings; the scan task lives in inequalities.tasks.
app.config_from_object('django.conf:settings', namespace='CELERY')
app.autodiscover_tasks(['inequalities'])
