# theorems/admin.py
"""
Read-only admin for persisted verification records.
"""

from django.contrib import admin

from core.admin import ReadOnlyModelAdmin
from .models import VerificationRecord


@admin.register(VerificationRecord)
class VerificationRecordAdmin(ReadOnlyModelAdmin):
    list_display = ['id', 'statement', 'instance', 'status', 'created_at']
    list_filter = ['statement', 'status', 'created_at']
    search_fields = ['instance']
    readonly_fields = ['statement', 'instance', 'status', 'report', 'created_at', 'updated_at']
    date_hierarchy = 'created_at'
