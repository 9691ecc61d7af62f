from django.apps import AppConfig


class AdjacencyConfig(AppConfig):
    default_auto_field = 'django.db.models.BigAutoField'
    name = 'adjacency'
    verbose_name = 'Adjacency matroids'
