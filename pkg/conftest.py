import os

import django

os.environ.setdefault('DJANGO_SETTINGS_MODULE', 'rtree_workbench.settings')
django.setup()
