package com.example.jotter.ui;

import android.app.Dialog;
import android.os.Bundle;
import androidx.appcompat.app.AlertDialog;
import androidx.fragment.app.DialogFragment;
import com.example.jotter.R;

public class LicenseDialog extends DialogFragment {
    @Override
    public Dialog onCreateDialog(Bundle savedInstanceState) {
        return new AlertDialog.Builder(requireContext())
                .setTitle(R.string.open_source_licenses)
                .setMessage(R.raw.licenses)
                .setPositiveButton(android.R.string.ok, null)
                .create();
    }
}
