'''
URL configuration for the toolkit project.

The toolkit is driven from management commands; the only web surface is the
admin, where persisted verification records can be browsed.
'''
from django.contrib import admin
from django.urls import path


urlpatterns = [
    path('admin/', admin.site.urls),
]
