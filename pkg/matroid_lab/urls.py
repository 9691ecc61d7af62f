"""
URL configuration for matroid_lab project.

Only the admin is routed; it browses stored verification runs.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path('admin/', admin.site.urls),
]
