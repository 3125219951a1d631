# core/admin.py
from django.contrib import admin


class ReadOnlyModelAdmin(admin.ModelAdmin):
    """
    Base admin configuration for append-only models using core mixins
    """

    readonly_fields = ("created_at", "updated_at")

    ordering = ("-created_at",)

    def has_add_permission(self, request):
        # Rows are created by management commands only
        return False

    def has_change_permission(self, request, obj=None):
        return False
